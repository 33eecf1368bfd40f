#include <doctest.h>

#include "tridess/galois.hpp"

using namespace tridess;

TEST_CASE("orbit decomposition of the primes above ell") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));  // K = Q
    for (u64 ell : {5, 7, 11}) {
        auto o = orbits(k1, ell);
        REQUIRE(o.size() == 1);
        CHECK(o[0] == std::vector<unsigned>{0});
    }

    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto o13 = orbits(k3, 13);
    REQUIRE(o13.size() == 1);
    CHECK(o13[0] == std::vector<unsigned>{0, 1, 2});  // transitive 3-cycle

    auto o2 = orbits(k3, 2);  // inert
    REQUIRE(o2.size() == 1);
    CHECK(o2[0] == std::vector<unsigned>{0});
}

TEST_CASE("theorem C report for a single-ideal case") {
    OrbitReport r = verify_theorem_c(validate_signature(2, 3, kInf), 5);
    CHECK(r.verdict);
    REQUIRE(r.primes.size() == 1);
    REQUIRE(r.per_ideal.size() == 1);
    CHECK(r.per_ideal[0].group_order == 60);
    CHECK(r.per_ideal[0].genus == 0);
    CHECK(r.per_ideal[0].cusps == 12);
    CHECK(r.orbits == std::vector<std::vector<unsigned>>{{0}});
}

TEST_CASE("theorem C report for the Hurwitz triplet") {
    OrbitReport r = verify_theorem_c(validate_signature(2, 3, 7), 13);
    CHECK(r.verdict);
    REQUIRE(r.primes.size() == 3);
    REQUIRE(r.orbits.size() == 1);
    CHECK(r.orbits[0].size() == 3);
    for (const auto& inv : r.per_ideal) {
        CHECK(inv.group_order == 1092);
        CHECK(inv.genus == 14);
        CHECK(inv.cusps == 0);
        CHECK(inv.torsion_free);
        CHECK(inv == r.per_ideal[0]);  // identical along the orbit
    }
    // pairwise non-isomorphic: only the diagonal of the transporter matrix
    REQUIRE(r.iso_matrix.size() == 1);
    const auto& m = r.iso_matrix[0];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(m[i][j] == (i == j));
}

TEST_CASE("theorem C for an f = 2 orbit") {
    auto k4 = trace_field(validate_signature(2, 4, 5));
    auto primes = split_prime(k4, 11);
    for (const auto& p : primes) CHECK(p.f == 2);
    OrbitReport r = verify_theorem_c(validate_signature(2, 4, 5), 11);
    CHECK(r.verdict);
    REQUIRE(r.primes.size() == 2);
    REQUIRE(r.orbits.size() == 1);
    CHECK(r.orbits[0].size() == 2);
    CHECK(r.per_ideal[0] == r.per_ideal[1]);
}
