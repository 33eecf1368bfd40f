#include <doctest.h>

#include <algorithm>

#include "tridess/oarith.hpp"

using namespace tridess;

TEST_CASE("fp polynomial helpers") {
    CHECK(invmod(3, 13) == 9);
    CHECK(powmod(2, 12, 13) == 1);
    FpPoly f{1, 0, 1};  // x^2 + 1 over F_13: roots 5, 8
    auto factors = factor_squarefree(fp_monic(f, 13), 13);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == FpPoly{5, 1});  // x - 8
    CHECK(factors[1] == FpPoly{8, 1});  // x - 5
    // irreducible quadratic stays whole
    auto irr = factor_squarefree(FpPoly{1, 1, 1}, 5);
    REQUIRE(irr.size() == 1);
    CHECK(irr[0] == FpPoly{1, 1, 1});
}

TEST_CASE("residue field arithmetic") {
    auto F = ResidueField::create(13, FpPoly{11, 0, 1});  // x^2 - 2, f = 2
    CHECK(F->q() == 169);
    FFElem x = F->x();
    CHECK(F->mul(x, x) == F->from_int(2));  // x^2 = 2
    for (long v = 1; v < 20; ++v) {
        FFElem a = F->add(F->from_int(v), x);
        CHECK(F->mul(a, F->inv(a)) == F->one());
    }
    // sqrt: 2 has the root x; the smaller root in element order is returned
    auto r = F->sqrt(F->from_int(2));
    REQUIRE(r);
    CHECK(F->mul(*r, *r) == F->from_int(2));
    CHECK(*r == std::min(x, F->neg(x)));
    // squares and non-squares mod 13 inside the prime field of F_13
    auto Fp = ResidueField::create(13, FpPoly{0, 1});
    CHECK(Fp->sqrt(Fp->from_int(3)));
    CHECK(!Fp->sqrt(Fp->from_int(5)));
}

TEST_CASE("quadratic extension") {
    auto Fp = ResidueField::create(13, FpPoly{0, 1});
    auto E = ResidueExt::create(Fp);
    // y^2 + a y + b irreducible over F_13
    FFElem disc = Fp->sub(Fp->mul(E->mod_a(), E->mod_a()),
                          Fp->mul(Fp->from_int(4), E->mod_b()));
    CHECK(!Fp->sqrt(disc));
    ExtElem y{Fp->zero(), Fp->one()};
    for (long v = 1; v < 20; ++v) {
        ExtElem a = E->add(E->from_int(v), y);
        CHECK(E->mul(a, E->inv(a)) == E->one());
    }
    // sqrt_of_base really squares back to the embedded argument
    for (long s : {2, 5, 6, 7, 8, 11}) {
        ExtElem r = E->sqrt_of_base(Fp->from_int(s));
        CHECK(E->mul(r, r) == E->from_int(s));
    }
}

TEST_CASE("split_prime examples") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));  // K = Q
    auto p5 = split_prime(k1, 5);
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].f == 1);
    CHECK(p5[0].local_factor == FpPoly{0, 1});

    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto p13 = split_prime(k3, 13);
    REQUIRE(p13.size() == 3);
    std::vector<FpPoly> got;
    for (const auto& p : p13) {
        CHECK(p.f == 1);
        CHECK(p.ell == 13);
        got.push_back(p.local_factor);
    }
    // roots 3, 5, 6: local factors x-6, x-5, x-3 in sorted order
    CHECK(got == std::vector<FpPoly>{{7, 1}, {8, 1}, {10, 1}});

    auto p2 = split_prime(k3, 2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].f == 3);  // inert

    // residue degrees always sum to d
    auto k4 = trace_field(validate_signature(2, 4, 5));
    for (u64 ell : {7, 11, 13, 19, 31, 41}) {
        unsigned total = 0;
        for (const auto& p : split_prime(k4, ell)) total += p.f;
        CHECK(total == 4);
    }
}

TEST_CASE("irregular primes are rejected") {
    auto k3 = trace_field(validate_signature(2, 3, 7));
    // disc(x^3 - x^2 - 2x + 1) = 49
    CHECK_THROWS_AS(check_regular(k3, 7), unsupported_prime_error);
    CHECK_THROWS_AS(split_prime(k3, 7), unsupported_prime_error);
    CHECK_NOTHROW(check_regular(k3, 13));
}

TEST_CASE("reduce sends gamma to the chosen root") {
    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto primes = split_prime(k3, 13);
    KElement gamma = k3->gamma_element();
    KElement one = k3->element({1, 0, 0});
    for (const auto& p : primes) {
        u64 root = (13 - p.local_factor[0]) % 13;
        CHECK(reduce(gamma, p) == p.residue->from_int(static_cast<long>(root)));
        CHECK(reduce(one, p) == p.residue->one());
    }
    // denominator divisible by ell is a reduction error
    KElement bad = k3->element({Rational(1, 13), 0, 0});
    CHECK_THROWS_AS(reduce(bad, primes[0]), reduction_error);
}

TEST_CASE("reduce is a ring homomorphism") {
    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto p = split_prime(k3, 13)[1];
    KElement a = k3->element({Rational(1, 2), 3, Rational(-2, 5)});
    KElement b = k3->element({4, Rational(5, 3), 1});
    const ResidueField& F = *p.residue;
    CHECK(reduce(a + b, p) == F.add(reduce(a, p), reduce(b, p)));
    CHECK(reduce(a * b, p) == F.mul(reduce(a, p), reduce(b, p)));
}

TEST_CASE("galois_on_prime acts as a 3-cycle at 13") {
    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto primes = split_prime(k3, 13);
    auto gal = galois_group(k3);
    REQUIRE(gal.size() == 3);
    for (const auto& p : primes) CHECK(galois_on_prime(gal[0], p).same_ideal(p));

    const Automorphism& tau = gal[1];
    // tau permutes the three ideals in a single 3-cycle
    std::vector<unsigned> image;
    for (const auto& p : primes) {
        PrimeIdeal q = galois_on_prime(tau, p);
        CHECK(q.f == p.f);
        for (unsigned j = 0; j < primes.size(); ++j)
            if (q.same_ideal(primes[j])) image.push_back(j);
    }
    REQUIRE(image.size() == 3);
    CHECK(image[image[image[0]]] == 0);
    CHECK(image[0] != 0);

    // an inert prime is fixed by everything
    auto p2 = split_prime(k3, 2)[0];
    for (const auto& t : gal) CHECK(galois_on_prime(t, p2).same_ideal(p2));
}
