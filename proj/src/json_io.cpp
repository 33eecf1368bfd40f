#include "tridess/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tridess {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / boost::multiprecision::gcd(a, b) * b; }

std::string int_str(const Int& v) { return v.str(); }

}  // namespace

Json rationals_json(const std::vector<Rational>& coeffs) {
    Int common(1);
    for (const auto& c : coeffs) common = lcm_int(common, den(c));
    Json nums = Json::array();
    for (const auto& c : coeffs) nums.push_back(int_str(num(c) * (common / den(c))));
    return Json{{"den", int_str(common)}, {"num", nums}};
}

Json poly_json(const IPoly& p) {
    Json nums = Json::array();
    for (const auto& c : p.coeffs) nums.push_back(int_str(c));
    return Json{{"den", "1"}, {"num", nums}};
}

Json signature_json(const Signature& sig) {
    Json a = Json::array();
    for (int s : sig.entries()) {
        if (is_inf(s))
            a.push_back("inf");
        else
            a.push_back(s);
    }
    return a;
}

Json field_json(const TraceFieldPtr& f) {
    return Json{{"m", f->ambient()->m()},
                {"psi_minpoly", poly_json(f->ambient()->psi_minpoly())},
                {"k_minpoly", poly_json(f->k_minpoly())},
                {"gamma", rationals_json(f->gamma().coords)},
                {"degree", f->degree()}};
}

Json prime_json(const PrimeIdeal& p) {
    Json g = Json::array();
    for (u64 c : p.local_factor) g.push_back(c);
    return Json{{"ell", p.ell}, {"g", g}, {"f", p.f}};
}

Json dessin_json(const Dessin& d) {
    return Json{{"n", d.n}, {"sigma0", d.sigma0}, {"sigma1", d.sigma1}, {"sigma_inf", d.sigma_inf}};
}

Json passport_json(const Passport& p) {
    auto part = [](const std::vector<std::pair<std::uint32_t, std::uint32_t>>& m) {
        Json a = Json::array();
        for (auto [len, cnt] : m) a.push_back(Json::array({len, cnt}));
        return a;
    };
    return Json{{"over0", part(p.over0)}, {"over1", part(p.over1)}, {"overinf", part(p.overinf)}};
}

Json report_json(const EulerThetaReport& r) {
    Json j{{"genus", r.genus},
           {"cusps", r.cusps},
           {"chi_open", r.chi_open},
           {"theta_exists", r.theta_exists}};
    if (r.theta_degree) j["theta_degree"] = *r.theta_degree;
    j["theta_count"] = Json{{"log2", r.theta_count_log2}};
    j["torsion_free"] = r.torsion_free;
    return j;
}

unsigned automorphism_order(const TraceFieldPtr& field, long k) {
    unsigned e = 1;
    long cur = k;
    while (cur != 1) {
        cur = compose_residues(field, cur, k);
        ++e;
        if (e > field->degree()) throw internal_error("automorphism_order: runaway");
    }
    return e;
}

Json cmd_field(int p, int q, int r) {
    Signature sig = validate_signature(p, q, r);
    auto f = trace_field(sig);
    Json j = field_json(f);
    j["signature"] = signature_json(sig);
    Json orders = Json::array();
    for (long k : f->galois_reps()) orders.push_back(automorphism_order(f, k));
    j["galois_group"] = Json{{"order", f->degree()}, {"element_orders", orders}};
    return j;
}

Json cmd_splits(int p, int q, int r, u64 ell) {
    Signature sig = validate_signature(p, q, r);
    auto f = trace_field(sig);
    auto primes = split_prime(f, ell);
    Json arr = Json::array();
    for (const auto& pr : primes) arr.push_back(prime_json(pr));
    return Json{{"signature", signature_json(sig)}, {"ell", ell}, {"primes", arr}};
}

Json cmd_dessin(int p, int q, int r, u64 ell, unsigned ideal_index, const Config& cfg) {
    Signature sig = validate_signature(p, q, r);
    auto f = trace_field(sig);
    auto primes = split_prime(f, ell);
    if (ideal_index >= primes.size())
        throw validation_error("ideal index " + std::to_string(ideal_index) + " out of range (" +
                               std::to_string(primes.size()) + " primes above ell)");
    const PrimeIdeal& pr = primes[ideal_index];
    CongruenceQuotient G = congruence_quotient(sig, pr, cfg.max_group_order, cfg.force_bad_primes);
    Dessin d = regular_dessin(G);
    EulerThetaReport et = euler_theta_report(d, sig, G);
    if (!genus_crosscheck(d, sig, G)) throw internal_error("cmd_dessin: genus cross-check failed");
    return Json{{"signature", signature_json(sig)},
                {"ell", ell},
                {"ideal_index", ideal_index},
                {"ideal", prime_json(pr)},
                {"group_order", G.order()},
                {"dessin", dessin_json(d)},
                {"passport", passport_json(passport(d))},
                {"report", report_json(et)}};
}

Json cmd_orbit(int p, int q, int r, u64 ell, const Config& cfg) {
    Signature sig = validate_signature(p, q, r);
    OrbitReport rep = verify_theorem_c(sig, ell, cfg.max_group_order, cfg.force_bad_primes);
    Json primes = Json::array();
    for (const auto& pr : rep.primes) primes.push_back(prime_json(pr));
    Json per = Json::array();
    for (const auto& inv : rep.per_ideal)
        per.push_back(Json{{"group_order", inv.group_order},
                           {"passport", passport_json(inv.pass)},
                           {"genus", inv.genus},
                           {"cusps", inv.cusps},
                           {"torsion_free", inv.torsion_free}});
    Json orbs = Json::array();
    for (const auto& o : rep.orbits) orbs.push_back(o);
    Json iso = Json::array();
    for (const auto& m : rep.iso_matrix) iso.push_back(m);
    return Json{{"signature", signature_json(sig)}, {"ell", ell},     {"primes", primes},
                {"per_ideal", per},                 {"orbits", orbs}, {"iso_matrix", iso},
                {"verdict", rep.verdict}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string orbit_table(const Json& rep) {
    std::ostringstream os;
    os << "signature " << rep["signature"].dump() << "  ell " << rep["ell"].get<u64>() << "\n";
    os << "ideal                 f   |G|      genus  cusps  passport          orbit\n";
    const auto& primes = rep["primes"];
    const auto& per = rep["per_ideal"];
    std::vector<int> orbit_of(primes.size(), -1);
    for (std::size_t o = 0; o < rep["orbits"].size(); ++o)
        for (const auto& idx : rep["orbits"][o]) orbit_of[idx.get<unsigned>()] = static_cast<int>(o);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::ostringstream ideal;
        ideal << "(" << primes[i]["ell"].get<u64>() << ", g=" << primes[i]["g"].dump() << ")";
        std::string pass_hash = fnv1a_hex(per[i]["passport"].dump());
        os << ideal.str();
        for (std::size_t k = ideal.str().size(); k < 22; ++k) os << ' ';
        os << primes[i]["f"].get<unsigned>() << "   " << per[i]["group_order"].get<std::size_t>()
           << "     " << per[i]["genus"].get<long>() << "      " << per[i]["cusps"].get<unsigned>()
           << "      " << pass_hash << "  " << orbit_of[i] << "\n";
    }
    os << "verdict: " << (rep["verdict"].get<bool>() ? "true" : "false") << "\n";
    return os.str();
}

std::string cmd_dessin_cached(int p, int q, int r, u64 ell, unsigned ideal_index,
                              const Config& cfg) {
    if (cfg.cache_dir.empty())
        return dump(cmd_dessin(p, q, r, ell, ideal_index, cfg));
    std::string key = "dessin|" + entry_str(p) + "|" + entry_str(q) + "|" + entry_str(r) + "|" +
                      std::to_string(ell) + "|" + std::to_string(ideal_index) + "|" +
                      std::to_string(cfg.max_group_order) + "|" +
                      (cfg.force_bad_primes ? "f" : "-");
    namespace fs = std::filesystem;
    fs::path dir(cfg.cache_dir);
    fs::create_directories(dir);
    fs::path file = dir / (fnv1a_hex(key) + ".json");
    if (fs::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string out = dump(cmd_dessin(p, q, r, ell, ideal_index, cfg));
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary);
        o << out;
    }
    fs::rename(tmp, file);
    return out;
}

}  // namespace tridess
