#include "tridess/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "tridess/json_io.hpp"

namespace tridess {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    std::vector<std::string> errors;
    void require(bool ok, const std::string& msg) {
        if (!ok) errors.push_back(msg);
    }
};

IPoly compose(const IPoly& outer, const IPoly& inner) {
    IPoly acc;
    for (std::size_t i = outer.coeffs.size(); i-- > 0;)
        acc = acc * inner + IPoly::constant(outer.coeffs[i]);
    return acc;
}

KElement random_k_element(const TraceFieldPtr& f, u64 ell, std::mt19937_64& rng) {
    std::vector<Rational> coords(f->degree());
    const long dens[] = {1, 2, 3, 5, 7};
    for (auto& c : coords) {
        long n = static_cast<long>(rng() % 101) - 50;
        long d = dens[rng() % 5];
        while (static_cast<u64>(d) % ell == 0) d = dens[rng() % 5];
        c = Rational(n, d);
    }
    return f->element(std::move(coords));
}

Passport make_passport(std::uint32_t l0, std::uint32_t c0, std::uint32_t l1, std::uint32_t c1,
                       std::uint32_t li, std::uint32_t ci) {
    return Passport{{{l0, c0}}, {{l1, c1}}, {{li, ci}}};
}

// --- criterion bodies ------------------------------------------------------

void criterion_fields(Checker& ck) {
    IPoly expected_cubic({Int(1), Int(-2), Int(-1), Int(1)});  // x^3 - x^2 - 2x + 1
    if (std::getenv("DESSIN_SELFTEST_FAULT") != nullptr)
        expected_cubic.coeffs[0] += 1;  // injected fault: corrupt the frozen table

    struct Row {
        Signature sig;
        unsigned degree;
    };
    const Row rows[] = {{{2, 3, kInf}, 1}, {{3, 3, 4}, 2}, {{2, 3, 7}, 3}, {{2, 4, 5}, 4}};
    for (const auto& row : rows) {
        auto f = trace_field(row.sig);
        ck.require(f->degree() == row.degree,
                   to_string(row.sig) + ": degree " + std::to_string(f->degree()));
        double v = f->k_minpoly().eval_double(f->gamma_numeric());
        ck.require(std::abs(v) < 1e-10, to_string(row.sig) + ": numeric root check");
    }
    auto hurwitz = trace_field({2, 3, 7});
    ck.require(hurwitz->k_minpoly() == expected_cubic, "(2,3,7): k_minpoly != x^3 - x^2 - 2x + 1");
    ck.require(trace_field({3, 3, 4})->k_minpoly() == IPoly({Int(-2), Int(0), Int(1)}),
               "(3,3,4): k_minpoly != x^2 - 2");
}

void criterion_splitting(Checker& ck) {
    auto f = trace_field({2, 3, 7});
    auto at13 = split_prime(f, 13);
    ck.require(at13.size() == 3, "ell=13: expected 3 primes");
    std::vector<FpPoly> expected = {{10, 1}, {8, 1}, {7, 1}};  // x-3, x-5, x-6
    std::sort(expected.begin(), expected.end());
    std::vector<FpPoly> got;
    for (const auto& p : at13) {
        got.push_back(p.local_factor);
        ck.require(p.f == 1, "ell=13: expected residue degree 1");
    }
    std::sort(got.begin(), got.end());
    ck.require(got == expected, "ell=13: factors differ from {x-3, x-5, x-6}");

    auto at2 = split_prime(f, 2);
    ck.require(at2.size() == 1 && at2[0].f == 3, "ell=2: expected a single inert prime, f=3");
}

void modular_classic(Checker& ck, u64 ell, std::size_t order, const Passport& pass, long g,
                     unsigned cusps, long theta_degree, long chi) {
    Signature sig{2, 3, kInf};
    auto f = trace_field(sig);
    auto primes = split_prime(f, ell);
    ck.require(primes.size() == 1, "modular: single prime expected over Q");
    CongruenceQuotient G = congruence_quotient(sig, primes[0]);
    Dessin d = regular_dessin(G);
    EulerThetaReport et = euler_theta_report(d, sig, G);
    std::string tag = "(2,3,inf) mod " + std::to_string(ell) + ": ";
    ck.require(G.order() == order, tag + "|G| = " + std::to_string(G.order()));
    ck.require(passport(d) == pass, tag + "passport mismatch");
    ck.require(et.genus == g, tag + "genus " + std::to_string(et.genus));
    ck.require(et.cusps == cusps, tag + "cusps " + std::to_string(et.cusps));
    ck.require(et.chi_open == chi, tag + "chi_open " + std::to_string(et.chi_open));
    ck.require(et.theta_exists && et.theta_degree && *et.theta_degree == theta_degree,
               tag + "theta degree");
    ck.require(genus_crosscheck(d, sig, G), tag + "genus cross-check");
}

void criterion_hurwitz(Checker& ck) {
    OrbitReport rep = verify_theorem_c({2, 3, 7}, 13);
    ck.require(rep.primes.size() == 3, "hurwitz: expected 3 primes above 13");
    ck.require(rep.orbits.size() == 1 && rep.orbits[0].size() == 3,
               "hurwitz: expected a single Galois orbit of size 3");
    Passport pass = make_passport(2, 546, 3, 364, 7, 156);
    for (const auto& inv : rep.per_ideal) {
        ck.require(inv.group_order == 1092, "hurwitz: |G| = " + std::to_string(inv.group_order));
        ck.require(inv.pass == pass, "hurwitz: passport mismatch");
        ck.require(inv.genus == 14, "hurwitz: genus " + std::to_string(inv.genus));
        ck.require(inv.cusps == 0, "hurwitz: cusps nonzero");
    }
    ck.require(rep.verdict, "hurwitz: Theorem-C consistency verdict false");
    const auto& iso = rep.iso_matrix.at(0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            ck.require(iso[i][j] == (i == j), "hurwitz: iso matrix not the identity pattern");

    auto f = trace_field({2, 3, 7});
    auto autos = galois_group(f);
    ck.require(autos.size() == 3, "hurwitz: Galois group order != 3");
    for (const auto& tau : autos)
        if (!tau.is_identity())
            ck.require(automorphism_order(f, tau.k) == 3, "hurwitz: generator order != 3");
}

struct DessinCase {
    Signature sig;
    PrimeIdeal prime;
    CongruenceQuotient G;
    Dessin d;
};

std::vector<DessinCase> build_property_cases() {
    std::vector<DessinCase> cases;
    auto add = [&](const Signature& sig, u64 ell) {
        auto f = trace_field(sig);
        for (const auto& p : split_prime(f, ell)) {
            CongruenceQuotient G = congruence_quotient(sig, p);
            Dessin d = regular_dessin(G);
            cases.push_back(DessinCase{sig, p, std::move(G), std::move(d)});
        }
    };
    for (u64 ell : {5, 7, 11, 13}) add({2, 3, kInf}, ell);
    add({2, 3, 7}, 13);
    add({3, 3, 4}, 7);
    return cases;
}

void property_dickson(Checker& ck) {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 100; ++i) {
        unsigned k = rng() % 31, l = rng() % 31;
        ck.require(compose(dickson(k), dickson(l)) == dickson(k * l),
                   "dickson composition fails at k=" + std::to_string(k) +
                       " l=" + std::to_string(l));
        if (!ck.errors.empty()) return;
    }
}

void property_reduce_hom(Checker& ck) {
    std::mt19937_64 rng(77);
    struct Case {
        Signature sig;
        u64 ell;
    };
    const Case cs[] = {{{2, 3, 7}, 13}, {{2, 3, 7}, 2}, {{3, 3, 4}, 7}, {{2, 4, 5}, 11}};
    for (const auto& c : cs) {
        auto f = trace_field(c.sig);
        for (const auto& p : split_prime(f, c.ell)) {
            const ResidueField& R = *p.residue;
            for (int i = 0; i < 100; ++i) {
                KElement a = random_k_element(f, c.ell, rng);
                KElement b = random_k_element(f, c.ell, rng);
                bool add_ok = reduce(a + b, p) == R.add(reduce(a, p), reduce(b, p));
                bool mul_ok = reduce(a * b, p) == R.mul(reduce(a, p), reduce(b, p));
                ck.require(add_ok && mul_ok, "reduce is not a ring homomorphism at ell=" +
                                                 std::to_string(c.ell));
                if (!ck.errors.empty()) return;
            }
        }
    }
}

void property_galois_action(Checker& ck) {
    struct Case {
        Signature sig;
        u64 ell;
    };
    const Case cs[] = {{{2, 3, 7}, 13}, {{2, 3, 7}, 29}, {{2, 4, 5}, 11},
                       {{2, 4, 5}, 31}, {{3, 3, 4}, 7},  {{3, 3, 4}, 17}};
    for (const auto& c : cs) {
        auto f = trace_field(c.sig);
        auto autos = galois_group(f);
        auto primes = split_prime(f, c.ell);
        for (const auto& p : primes) {
            ck.require(galois_on_prime(autos[0], p).same_ideal(p), "identity moves a prime");
            for (const auto& s : autos) {
                ck.require(galois_on_prime(s, p).f == p.f, "residue degree not Galois-invariant");
                for (const auto& t : autos) {
                    long st = compose_residues(f, s.k, t.k);
                    const Automorphism* comp = nullptr;
                    for (const auto& a : autos)
                        if (a.k == st) comp = &a;
                    ck.require(comp != nullptr, "composition left the automorphism list");
                    if (!comp) return;
                    bool assoc = galois_on_prime(*comp, p).same_ideal(
                        galois_on_prime(s, galois_on_prime(t, p)));
                    ck.require(assoc, "galois_on_prime is not a group action");
                }
            }
        }
        // all primes above a regular ell share f, and the action is transitive
        for (const auto& p : primes)
            ck.require(p.f == primes[0].f, "unequal residue degrees above one ell");
        auto orbs = orbits(f, c.ell);
        ck.require(orbs.size() == 1 || primes.size() == 1,
                   "action not transitive on primes above ell=" + std::to_string(c.ell));
        if (!ck.errors.empty()) return;
    }
}

void property_dessins(Checker& ck, const std::vector<DessinCase>& cases) {
    for (const auto& cse : cases) {
        std::string tag = to_string(cse.sig) + " mod " + std::to_string(cse.prime.ell) + ": ";
        const Dessin& d = cse.d;
        // triple relation
        bool triple = true;
        for (std::uint32_t i = 0; i < d.n; ++i)
            if (d.sigma_inf[d.sigma1[d.sigma0[i]]] != i) triple = false;
        ck.require(triple, tag + "triple relation fails");
        ck.require(is_transitive(d), tag + "not transitive");
        // regularity: uniform cycle lengths = generator orders
        Passport pass = passport(d);
        ck.require(pass.over0.size() == 1 && pass.over0[0].first == cse.G.ord_x &&
                       pass.over1.size() == 1 && pass.over1[0].first == cse.G.ord_y &&
                       pass.overinf.size() == 1 && pass.overinf[0].first == cse.G.ord_z,
                   tag + "regularity fails");
        long g = genus(d);
        ck.require(g >= 0, tag + "negative genus");
        ck.require(genus_crosscheck(d, cse.sig, cse.G), tag + "genus cross-check fails");
        EulerThetaReport et = euler_theta_report(d, cse.sig, cse.G);
        ck.require(et.theta_exists == (et.cusps % 2 == 0), tag + "theta parity fails");
        if (et.theta_exists)
            ck.require(et.theta_degree && *et.theta_degree == -et.chi_open / 2,
                       tag + "theta degree fails");
        else
            ck.require(!et.theta_degree, tag + "theta degree present without existence");
        ck.require(et.chi_open == 2 - 2 * et.genus - static_cast<long>(et.cusps),
                   tag + "chi bookkeeping fails");
        ck.require(et.torsion_free == (cse.G.ord_x == expected_order(cse.sig.p, cse.prime.ell) &&
                                       cse.G.ord_y == expected_order(cse.sig.q, cse.prime.ell) &&
                                       cse.G.ord_z == expected_order(cse.sig.r, cse.prime.ell)),
                   tag + "torsion flag inconsistent");
    }
}

void property_sign_robustness(Checker& ck, const std::vector<DessinCase>& cases) {
    for (const auto& cse : cases) {
        auto plus = congruence_quotient_with_sign(cse.sig, cse.prime, true);
        if (!plus) continue;  // only one admissible sign for this case
        Dessin d2 = regular_dessin(*plus);
        ck.require(is_isomorphic(cse.d, d2),
                   to_string(cse.sig) + " mod " + std::to_string(cse.prime.ell) +
                       ": trace-sign flip changed the dessin");
    }
}

void property_isomorphism(Checker& ck, const std::vector<DessinCase>& cases) {
    // relabeled copy is isomorphic
    std::mt19937_64 rng(4242);
    const Dessin& d = cases.front().d;
    Perm relabel(d.n);
    for (std::uint32_t i = 0; i < d.n; ++i) relabel[i] = i;
    std::shuffle(relabel.begin(), relabel.end(), rng);
    Dessin shuffled;
    shuffled.n = d.n;
    shuffled.sigma0.resize(d.n);
    shuffled.sigma1.resize(d.n);
    shuffled.sigma_inf.resize(d.n);
    for (std::uint32_t i = 0; i < d.n; ++i) {
        shuffled.sigma0[relabel[i]] = relabel[d.sigma0[i]];
        shuffled.sigma1[relabel[i]] = relabel[d.sigma1[i]];
        shuffled.sigma_inf[relabel[i]] = relabel[d.sigma_inf[i]];
    }
    ck.require(is_isomorphic(d, shuffled), "relabeled dessin not isomorphic to itself");
    for (const auto& cse : cases)
        ck.require(is_isomorphic(cse.d, cse.d), "dessin not isomorphic to itself");
}

void criterion_determinism(Checker& ck) {
    Config cfg;
    std::string a = dump(cmd_dessin(2, 3, 7, 13, 0, cfg));
    std::string b = dump(cmd_dessin(2, 3, 7, 13, 0, cfg));
    ck.require(a == b, "repeated runs differ");

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("tridess-selftest-" + fnv1a_hex(a).substr(0, 8));
    fs::remove_all(dir);
    cfg.cache_dir = dir.string();
    std::string cold = cmd_dessin_cached(2, 3, 7, 13, 0, cfg);
    std::string hit = cmd_dessin_cached(2, 3, 7, 13, 0, cfg);
    fs::remove_all(dir);
    ck.require(cold == a && hit == a, "cache round-trip changed output bytes");
}

}  // namespace

int run_acceptance(std::ostream& os) {
    int failures = 0;
    auto run = [&](const std::string& name, double limit_seconds, auto&& body) {
        Checker ck;
        auto t0 = Clock::now();
        try {
            body(ck);
        } catch (const std::exception& e) {
            ck.errors.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs > limit_seconds)
            ck.errors.push_back("runtime " + std::to_string(secs) + "s exceeds limit");
        if (ck.errors.empty()) {
            os << "PASS " << name << " (" << secs << "s)\n";
        } else {
            ++failures;
            os << "FAIL " << name << " (" << secs << "s)\n";
            for (const auto& e : ck.errors) os << "      " << e << "\n";
        }
    };

    run("criterion 1: trace-field table", 1.0, [](Checker& ck) { criterion_fields(ck); });
    run("criterion 2: prime splitting in K(2,3,7)", 1.0,
        [](Checker& ck) { criterion_splitting(ck); });
    run("criterion 3a: X(5) modular classic", 5.0, [](Checker& ck) {
        modular_classic(ck, 5, 60, make_passport(2, 30, 3, 20, 5, 12), 0, 12, 5, -10);
    });
    run("criterion 3b: X(7) modular classic", 5.0, [](Checker& ck) {
        modular_classic(ck, 7, 168, make_passport(2, 84, 3, 56, 7, 24), 3, 24, 14, -28);
    });
    run("criterion 4: Hurwitz triplet at 13", 60.0, [](Checker& ck) { criterion_hurwitz(ck); });
    run("criterion 5: property suites", 120.0, [](Checker& ck) {
        property_dickson(ck);
        property_reduce_hom(ck);
        property_galois_action(ck);
        auto cases = build_property_cases();
        property_dessins(ck, cases);
        property_sign_robustness(ck, cases);
        property_isomorphism(ck, cases);
    });
    run("criterion 6: byte determinism", 30.0, [](Checker& ck) { criterion_determinism(ck); });
    os << (failures == 0 ? "acceptance: all criteria passed\n"
                         : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
    return failures;
}

}  // namespace tridess
