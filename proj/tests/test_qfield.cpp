#include <doctest.h>

#include <cmath>

#include "tridess/qfield.hpp"

using namespace tridess;

namespace {

IPoly ipoly(std::vector<Int> c) { return IPoly(std::move(c)); }

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

TEST_CASE("signature parsing and validation") {
    CHECK(parse_entry("inf") == kInf);
    CHECK(parse_entry("7") == 7);
    CHECK_THROWS_AS(parse_entry("1"), validation_error);
    CHECK_THROWS_AS(parse_entry("x"), validation_error);

    CHECK(validate_signature(2, 3, 7) == Signature{2, 3, 7});
    CHECK(validate_signature(kInf, kInf, kInf) == Signature{kInf, kInf, kInf});
    CHECK_THROWS_AS(validate_signature(2, 3, 6), validation_error);  // euclidean
    CHECK_THROWS_AS(validate_signature(2, 2, 2), validation_error);  // spherical
}

TEST_CASE("dickson polynomials") {
    CHECK(dickson(0) == ipoly({2}));
    CHECK(dickson(1) == ipoly({0, 1}));
    CHECK(dickson(2) == ipoly({-2, 0, 1}));
    CHECK(dickson(3) == ipoly({0, -3, 0, 1}));
    // defining property D_k(2cos a) = 2cos(ka) at a few angles
    for (unsigned k = 0; k <= 8; ++k) {
        for (double a : {0.3, 1.1, 2.0}) {
            double lhs = dickson(k).eval_double(2 * std::cos(a));
            CHECK(std::abs(lhs - 2 * std::cos(k * a)) < 1e-9);
        }
    }
}

TEST_CASE("cos_minpoly small cases") {
    CHECK(cos_minpoly(1) == ipoly({2, 1}));   // 2cos(pi) = -2
    CHECK(cos_minpoly(2) == ipoly({0, 1}));   // 2cos(pi/2) = 0
    CHECK(cos_minpoly(3) == ipoly({-1, 1}));  // 2cos(pi/3) = 1
    CHECK(cos_minpoly(5) == ipoly({-1, -1, 1}));
    CHECK(cos_minpoly(7) == ipoly({1, -2, -1, 1}));
}

TEST_CASE("cos_minpoly degree is phi(2m)/2 and kills 2cos(pi/m)") {
    for (unsigned m = 2; m <= 40; ++m) {
        IPoly f = cos_minpoly(m);
        CHECK(f.degree() == static_cast<long>(euler_phi(2 * m) / 2));
        CHECK(std::abs(f.eval_double(2 * std::cos(M_PI / m))) < 1e-8);
        CHECK(f.coeffs.back() == 1);  // monic
    }
}

TEST_CASE("lambda_element examples") {
    auto F7 = AmbientField::create(7);
    AmbientElement psi = lambda_element(F7, 7);
    CHECK(psi.coords == std::vector<Rational>{0, 1, 0});

    auto F6 = AmbientField::create(6);
    CHECK(lambda_element(F6, 2).is_zero());
    AmbientElement one = lambda_element(F6, 3);
    CHECK(one.is_rational());
    CHECK(one.coords[0] == 1);
    AmbientElement two = lambda_element(F6, kInf);
    CHECK(two.coords[0] == 2);

    CHECK_THROWS_AS(lambda_element(F6, 5), validation_error);  // 5 does not divide 6
}

TEST_CASE("ambient arithmetic and galois action") {
    auto F = AmbientField::create(7);
    AmbientElement psi = lambda_element(F, 7);
    AmbientElement t = psi * psi - psi * Rational(2);
    CHECK(std::abs(t.eval_numeric() -
                   (std::pow(2 * std::cos(M_PI / 7), 2) - 2 * 2 * std::cos(M_PI / 7))) < 1e-9);
    // sigma_3 sends 2cos(pi/7) to 2cos(3pi/7); applying it three more times with
    // k=3 each walks the orbit, and sigma_1 is the identity
    CHECK(psi.galois_image(1) == psi);
    AmbientElement im = psi.galois_image(3);
    CHECK(std::abs(im.eval_numeric() - 2 * std::cos(3 * M_PI / 7)) < 1e-9);
    // multiplicativity of the action
    CHECK((psi * psi).galois_image(3) == im * im);
}

TEST_CASE("trace_field degree table") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));
    CHECK(k1->degree() == 1);
    CHECK(k1->k_minpoly() == ipoly({0, 1}));
    CHECK(k1->gamma().is_zero());

    auto k2 = trace_field(validate_signature(3, 3, 4));
    CHECK(k2->degree() == 2);
    CHECK(k2->k_minpoly() == ipoly({-2, 0, 1}));  // gamma = sqrt(2)

    auto k3 = trace_field(validate_signature(2, 3, 7));
    CHECK(k3->degree() == 3);
    CHECK(k3->k_minpoly() == ipoly({1, -2, -1, 1}));
    CHECK(std::abs(k3->gamma_numeric() - 2 * std::cos(M_PI / 7)) < 1e-9);

    auto k4 = trace_field(validate_signature(2, 4, 5));
    CHECK(k4->degree() == 4);  // Q(sqrt2, sqrt5)
}

TEST_CASE("galois_group structure") {
    auto k1 = trace_field(validate_signature(2, 3, kInf));
    auto g1 = galois_group(k1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].is_identity());

    auto k3 = trace_field(validate_signature(2, 3, 7));
    auto g3 = galois_group(k3);
    REQUIRE(g3.size() == 3);
    CHECK(g3[0].is_identity());
    // cyclic of order 3: every non-identity element generates
    for (std::size_t i = 1; i < 3; ++i) {
        long k = g3[i].k;
        long kk = compose_residues(k3, k, k);
        CHECK(kk != 1);
        CHECK(compose_residues(k3, kk, k) == 1);
    }

    auto k4 = trace_field(validate_signature(2, 4, 5));
    auto g4 = galois_group(k4);
    REQUIRE(g4.size() == 4);
    for (std::size_t i = 1; i < 4; ++i)  // Klein four-group
        CHECK(compose_residues(k4, g4[i].k, g4[i].k) == 1);
}

TEST_CASE("to_k_coordinates examples and round trip") {
    auto k3 = trace_field(validate_signature(2, 3, 7));
    KElement g = to_k_coordinates(k3->gamma(), k3);
    CHECK(g.coords == std::vector<Rational>{0, 1, 0});

    CHECK(k3->lambda_k(2).coords == std::vector<Rational>{0, 0, 0});  // lambda_4 = 0
    CHECK(k3->lambda_k(3).coords == std::vector<Rational>{1, 0, 0});  // lambda_6 = 1

    // round trip through the ambient field on a few elements
    for (auto coords : {std::vector<Rational>{1, 2, 3}, {Rational(1, 2), 0, Rational(-5, 3)},
                        {0, 0, 1}}) {
        KElement a = k3->element(coords);
        CHECK(to_k_coordinates(a.to_ambient(), k3) == a);
    }

    // psi = 2cos(pi/42) is not in the index-3 subfield
    AmbientElement psi = lambda_element(k3->ambient(), 42);
    CHECK_THROWS_AS(to_k_coordinates(psi, k3), not_in_subfield_error);
}

TEST_CASE("KElement ring operations agree with the ambient embedding") {
    auto k = trace_field(validate_signature(2, 4, 5));
    KElement a = k->element({1, 2, 0, Rational(1, 3)});
    KElement b = k->element({0, Rational(-1, 2), 1, 5});
    CHECK((a + b).to_ambient() == a.to_ambient() + b.to_ambient());
    CHECK((a * b).to_ambient() == a.to_ambient() * b.to_ambient());
    // k_minpoly(gamma) = 0
    KElement acc = k->element({1, 0, 0, 0});
    KElement g = k->gamma_element();
    KElement val = k->element({0, 0, 0, 0});
    KElement pw = acc;
    const auto& mp = k->k_minpoly().coeffs;
    for (std::size_t i = 0; i < mp.size(); ++i) {
        KElement term = pw;
        for (auto& c : term.coords) c *= Rational(mp[i]);
        val = val + term;
        pw = pw * g;
    }
    CHECK(val == k->element({0, 0, 0, 0}));
}
