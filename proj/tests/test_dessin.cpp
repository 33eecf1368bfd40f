#include <doctest.h>

#include <algorithm>
#include <random>

#include "tridess/dessin.hpp"

using namespace tridess;

namespace {

CongruenceQuotient modular_group(u64 ell) {
    auto k = trace_field(validate_signature(2, 3, kInf));
    return congruence_quotient(Signature{2, 3, kInf}, split_prime(k, ell)[0]);
}

Dessin relabel(const Dessin& d, const Perm& r) {
    Dessin s;
    s.n = d.n;
    s.sigma0.resize(d.n);
    s.sigma1.resize(d.n);
    s.sigma_inf.resize(d.n);
    for (std::uint32_t i = 0; i < d.n; ++i) {
        s.sigma0[r[i]] = r[d.sigma0[i]];
        s.sigma1[r[i]] = r[d.sigma1[i]];
        s.sigma_inf[r[i]] = r[d.sigma_inf[i]];
    }
    return s;
}

}  // namespace

TEST_CASE("permutation helpers") {
    Perm p{2, 0, 1, 3};  // 3-cycle and a fixed point
    Perm inv = perm_inverse(p);
    CHECK(inv == Perm{1, 2, 0, 3});
    CHECK(cycle_count(p) == 2);
    auto ct = cycle_type(p);
    CHECK(ct == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 1}, {3, 1}});
}

TEST_CASE("X(5): the modular dessin mod 5") {
    CongruenceQuotient G = modular_group(5);
    Dessin d = regular_dessin(G);
    CHECK(d.n == 60);
    Passport pass = passport(d);
    CHECK(pass.over0 == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 30}});
    CHECK(pass.over1 == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 20}});
    CHECK(pass.overinf == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 12}});
    CHECK(is_transitive(d));
    CHECK(genus(d) == 0);
    CHECK(genus_crosscheck(d, G.sig, G));
    // triple relation, composing left to right
    for (std::uint32_t i = 0; i < d.n; ++i)
        CHECK(d.sigma_inf[d.sigma1[d.sigma0[i]]] == i);

    EulerThetaReport r = euler_theta_report(d, G.sig, G);
    CHECK(r.genus == 0);
    CHECK(r.cusps == 12);
    CHECK(r.chi_open == -10);
    CHECK(r.theta_exists);
    CHECK(r.theta_degree == 5);
    CHECK(r.theta_count_log2 == 0);
    CHECK(r.torsion_free);
}

TEST_CASE("X(7): Klein quartic values") {
    CongruenceQuotient G = modular_group(7);
    Dessin d = regular_dessin(G);
    CHECK(d.n == 168);
    CHECK(cycle_count(d.sigma0) == 84);
    CHECK(cycle_count(d.sigma1) == 56);
    CHECK(cycle_count(d.sigma_inf) == 24);
    CHECK(genus(d) == 3);
    EulerThetaReport r = euler_theta_report(d, G.sig, G);
    CHECK(r.cusps == 24);
    CHECK(r.chi_open == -28);
    CHECK(r.theta_degree == 14);
    CHECK(r.theta_count_log2 == 6);
}

TEST_CASE("compact case has no cusps") {
    auto k = trace_field(validate_signature(2, 3, 7));
    auto p = split_prime(k, 13)[0];
    CongruenceQuotient G = congruence_quotient(Signature{2, 3, 7}, p);
    Dessin d = regular_dessin(G);
    CHECK(d.n == 1092);
    CHECK(genus(d) == 14);
    EulerThetaReport r = euler_theta_report(d, G.sig, G);
    CHECK(r.cusps == 0);
    CHECK(r.chi_open == -26);
    CHECK(r.theta_exists);
    CHECK(r.theta_degree == 13);
    CHECK(r.theta_count_log2 == 28);
}

TEST_CASE("isomorphism: reflexive and relabeling-invariant") {
    CongruenceQuotient G = modular_group(5);
    Dessin d = regular_dessin(G);
    CHECK(is_isomorphic(d, d));

    std::mt19937_64 rng(7);
    Perm r(d.n);
    for (std::uint32_t i = 0; i < d.n; ++i) r[i] = i;
    std::shuffle(r.begin(), r.end(), rng);
    CHECK(is_isomorphic(d, relabel(d, r)));
}

TEST_CASE("isomorphism distinguishes different dessins") {
    CongruenceQuotient G5 = modular_group(5);
    CongruenceQuotient G7 = modular_group(7);
    Dessin d5 = regular_dessin(G5);
    Dessin d7 = regular_dessin(G7);
    CHECK(!is_isomorphic(d5, d7));  // different degree

    // same passport but conjugate members of the Hurwitz triplet differ
    auto k = trace_field(validate_signature(2, 3, 7));
    auto primes = split_prime(k, 13);
    Dessin a = regular_dessin(congruence_quotient(Signature{2, 3, 7}, primes[0]));
    Dessin b = regular_dessin(congruence_quotient(Signature{2, 3, 7}, primes[1]));
    CHECK(passport(a) == passport(b));
    CHECK(!is_isomorphic(a, b));
}
