#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "tridess/json_io.hpp"
#include "tridess/selftest.hpp"

namespace {

using namespace tridess;

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream o(output, std::ios::binary);
        o << text;
    }
}

struct SigArgs {
    std::string p, q, r;
    Signature parse() const {
        return validate_signature(parse_entry(p), parse_entry(q), parse_entry(r));
    }
};

void add_signature(CLI::App* cmd, SigArgs& s) {
    cmd->add_option("p", s.p, "first signature entry (integer >= 2 or 'inf')")->required();
    cmd->add_option("q", s.q, "second signature entry")->required();
    cmd->add_option("r", s.r, "third signature entry")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"congruence dessins of hyperbolic triangle groups"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("DESSIN_CACHE_DIR")) cfg.cache_dir = env;
    std::string output;
    u64 ell = 0;
    unsigned ideal_index = 0;
    std::string json_out;

    SigArgs sf, ss, sd, so;

    auto* cmd_field_app = app.add_subcommand("field", "trace field K_{p,q,r}");
    add_signature(cmd_field_app, sf);
    cmd_field_app->add_option("-o,--output", output, "write JSON to a file instead of stdout");

    auto* cmd_splits_app = app.add_subcommand("splits", "prime ideals above ell");
    add_signature(cmd_splits_app, ss);
    cmd_splits_app->add_option("--ell", ell, "rational prime")->required();
    cmd_splits_app->add_option("-o,--output", output, "write JSON to a file instead of stdout");

    auto* cmd_dessin_app = app.add_subcommand("dessin", "congruence dessin at one prime ideal");
    add_signature(cmd_dessin_app, sd);
    cmd_dessin_app->add_option("--ell", ell, "rational prime")->required();
    cmd_dessin_app->add_option("--ideal-index", ideal_index, "index into the sorted prime list");
    cmd_dessin_app->add_flag("--force", cfg.force_bad_primes, "allow primes dividing 2*p*q*r");
    cmd_dessin_app->add_option("--max-group-order", cfg.max_group_order, "closure size limit");
    cmd_dessin_app->add_option("--cache-dir", cfg.cache_dir, "result cache directory");
    cmd_dessin_app->add_option("-o,--output", output, "write JSON to a file instead of stdout");

    auto* cmd_orbit_app = app.add_subcommand("orbit", "Galois orbits and Theorem-C verdict");
    add_signature(cmd_orbit_app, so);
    cmd_orbit_app->add_option("--ell", ell, "rational prime")->required();
    cmd_orbit_app->add_flag("--force", cfg.force_bad_primes, "allow primes dividing 2*p*q*r");
    cmd_orbit_app->add_option("--max-group-order", cfg.max_group_order, "closure size limit");
    cmd_orbit_app->add_option("--json", json_out, "also write the full report as JSON");

    auto* cmd_selftest_app = app.add_subcommand("selftest", "run the acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_field_app->parsed()) {
            Signature sig = sf.parse();
            emit(dump(cmd_field(sig.p, sig.q, sig.r)), output);
        } else if (cmd_splits_app->parsed()) {
            Signature sig = ss.parse();
            emit(dump(cmd_splits(sig.p, sig.q, sig.r, ell)), output);
        } else if (cmd_dessin_app->parsed()) {
            Signature sig = sd.parse();
            emit(cmd_dessin_cached(sig.p, sig.q, sig.r, ell, ideal_index, cfg), output);
        } else if (cmd_orbit_app->parsed()) {
            Signature sig = so.parse();
            Json rep = cmd_orbit(sig.p, sig.q, sig.r, ell, cfg);
            std::cout << orbit_table(rep);
            if (!json_out.empty()) emit(dump(rep), json_out);
            return rep["verdict"].get<bool>() ? 0 : 1;
        } else if (cmd_selftest_app->parsed()) {
            return run_acceptance(std::cout) == 0 ? 0 : 1;
        }
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_prime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
