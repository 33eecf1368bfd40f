#include <doctest.h>

#include "tridess/tri.hpp"

using namespace tridess;

namespace {

FFElem elem(const ResidueFieldPtr& F, long v) { return F->from_int(v); }

ProjMatrix mk(const ResidueExt& E, long a, long b, long c, long d) {
    return canonical(E, ProjMatrix{E.from_int(a), E.from_int(b), E.from_int(c), E.from_int(d)});
}

}  // namespace

TEST_CASE("expected_order") {
    CHECK(expected_order(7, 13) == 7);
    CHECK(expected_order(kInf, 5) == 5);  // parabolic
    CHECK(expected_order(2, 13) == 2);
}

TEST_CASE("trace_triple examples") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));
    auto p5 = split_prime(k1, 5)[0];
    TraceTriple t = trace_triple(Signature{2, 3, kInf}, p5);
    CHECK(t.beta_p == elem(p5.residue, 0));
    CHECK(t.beta_q == elem(p5.residue, 1));
    CHECK(t.beta_r == elem(p5.residue, 2));

    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto primes = split_prime(k3, 13);
    for (const auto& p : primes) {
        TraceTriple s = trace_triple(Signature{2, 3, 7}, p);
        u64 root = (13 - p.local_factor[0]) % 13;
        CHECK(s.beta_p == elem(p.residue, 0));
        CHECK(s.beta_q == elem(p.residue, 1));
        // beta_r = lambda_14 = gamma reduces to the root of the local factor
        CHECK(s.beta_r == elem(p.residue, static_cast<long>(root)));
    }
}

TEST_CASE("trace_triple rejects bad primes unless forced") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));
    auto p3 = split_prime(k1, 3)[0];
    CHECK_THROWS_AS(trace_triple(Signature{2, 3, kInf}, p3), unsupported_prime_error);
    CHECK_NOTHROW(trace_triple(Signature{2, 3, kInf}, p3, /*force=*/true));
    auto p2 = split_prime(k1, 2)[0];
    CHECK_THROWS_AS(trace_triple(Signature{2, 3, kInf}, p2), unsupported_prime_error);
}

TEST_CASE("projective matrix arithmetic") {
    auto F = ResidueField::create(13, FpPoly{0, 1});
    auto Eptr = ResidueExt::create(F);
    const ResidueExt& E = *Eptr;
    ProjMatrix m = mk(E, 2, 3, 5, 7);
    CHECK(canonical(E, m) == m);  // canonical is idempotent
    CHECK(mat_mul(E, m, mat_inv(E, m)) == mat_identity(E));
    CHECK(mat_mul(E, mat_identity(E), m) == m);
    // scalar multiples collapse to the same canonical form
    ProjMatrix twice{E.from_int(4), E.from_int(6), E.from_int(10), E.from_int(14)};
    CHECK(canonical(E, twice) == m);
    CHECK(proj_order(E, mk(E, 1, 1, 0, 1)) == 13);  // parabolic
    CHECK(proj_order(E, mk(E, 0, -1, 1, 0)) == 2);
}

TEST_CASE("macbeath triple over F_5") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));
    auto p5 = split_prime(k1, 5)[0];
    TraceTriple t = trace_triple(Signature{2, 3, kInf}, p5);
    auto Eptr = ResidueExt::create(p5.residue);
    const ResidueExt& E = *Eptr;
    auto [A, B] = macbeath_triple(Eptr, t);
    CHECK(A == mk(E, 0, -1, 1, 0));
    CHECK(B == mk(E, 0, -1, 1, 1));  // xi = -1 (double root of xi^2 - 3 xi + 1)
    ProjMatrix AB = mat_mul(E, A, B);
    CHECK(AB == mk(E, -1, -1, 0, -1));  // parabolic of trace -2
    CHECK(proj_order(E, A) == 2);
    CHECK(proj_order(E, B) == 3);
    CHECK(proj_order(E, AB) == 5);
}

TEST_CASE("macbeath triple needs the quadratic extension at (13, x-3)") {
    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto primes = split_prime(k3, 13);
    // the ideal with local factor x - 3
    const PrimeIdeal* p = nullptr;
    for (const auto& q : primes)
        if (q.local_factor == FpPoly{10, 1}) p = &q;
    REQUIRE(p);
    TraceTriple t = trace_triple(Signature{2, 3, 7}, *p);
    // disc = beta_r^2 - 4 = 5, a non-square mod 13
    CHECK(!p->residue->sqrt(p->residue->from_int(5)));
    auto Eptr = ResidueExt::create(p->residue);
    auto [A, B] = macbeath_triple(Eptr, t);
    unsigned ox, oy, oz;
    ox = proj_order(*Eptr, A);
    oy = proj_order(*Eptr, B);
    oz = proj_order(*Eptr, mat_mul(*Eptr, A, B));
    CHECK(ox == 2);
    CHECK(oy == 3);
    CHECK(oz == 7);
}

TEST_CASE("congruence quotient orders") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));
    auto G5 = congruence_quotient(Signature{2, 3, kInf}, split_prime(k1, 5)[0]);
    CHECK(G5.order() == 60);  // PSL2(F_5)
    CHECK(G5.position(mat_identity(*G5.ext)) == 0);
    CHECK(mat_mul(*G5.ext, mat_mul(*G5.ext, G5.gen_x, G5.gen_y), G5.gen_z) ==
          mat_identity(*G5.ext));

    auto G7 = congruence_quotient(Signature{2, 3, kInf}, split_prime(k1, 7)[0]);
    CHECK(G7.order() == 168);  // PSL2(F_7)

    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto G13 = congruence_quotient(Signature{2, 3, 7}, split_prime(k3, 13)[0]);
    CHECK(G13.order() == 1092);  // PSL2(F_13)
    CHECK(G13.ord_x == 2);
    CHECK(G13.ord_y == 3);
    CHECK(G13.ord_z == 7);
}

TEST_CASE("closure limit raises a resource error") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));
    auto p5 = split_prime(k1, 5)[0];
    CHECK_THROWS_AS(congruence_quotient(Signature{2, 3, kInf}, p5, /*max_order=*/10),
                    resource_error);
}

TEST_CASE("both trace signs give the same projective triple class") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));
    auto p5 = split_prime(k1, 5)[0];
    auto plus = congruence_quotient_with_sign(Signature{2, 3, kInf}, p5, true);
    REQUIRE(plus);
    CHECK(plus->order() == 60);
    CHECK(plus->ord_x == 2);
    CHECK(plus->ord_y == 3);
    CHECK(plus->ord_z == 5);
}
