#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <utility>
#include <vector>

#include "tridess/errors.hpp"

namespace tridess {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Dense univariate polynomial, coefficients ascending by degree,
/// trailing zeros stripped (zero polynomial = empty coefficient list).
template <typename C>
struct Polynomial {
    std::vector<C> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<C> c) : coeffs(std::move(c)) { normalize(); }

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(C c) { return Polynomial(std::vector<C>{std::move(c)}); }
    static Polynomial x() { return Polynomial(std::vector<C>{C(0), C(1)}); }
    // x^k
    static Polynomial monomial(std::size_t k, C c = C(1)) {
        std::vector<C> v(k + 1, C(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == C(0)) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    C coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : C(0); }
    const C& leading() const { return coeffs.back(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == C(1); }

    bool operator==(const Polynomial& o) const = default;

    Polynomial operator+(const Polynomial& o) const {
        std::vector<C> v(std::max(coeffs.size(), o.coeffs.size()), C(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
        return Polynomial(std::move(v));
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<C> v(std::max(coeffs.size(), o.coeffs.size()), C(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
        return Polynomial(std::move(v));
    }
    Polynomial operator-() const {
        std::vector<C> v = coeffs;
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<C> v(coeffs.size() + o.coeffs.size() - 1, C(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs.size(); ++j) v[i + j] += coeffs[i] * o.coeffs[j];
        return Polynomial(std::move(v));
    }
    Polynomial operator*(const C& c) const {
        std::vector<C> v = coeffs;
        for (auto& a : v) a = a * c;
        return Polynomial(std::move(v));
    }

    /// Quotient and remainder by a monic divisor.
    std::pair<Polynomial, Polynomial> divmod_monic(const Polynomial& g) const {
        if (!g.is_monic()) throw internal_error("divmod_monic: divisor not monic");
        std::vector<C> r = coeffs;
        long dg = g.degree();
        if (static_cast<long>(r.size()) - 1 < dg) return {zero(), *this};
        std::vector<C> q(r.size() - dg, C(0));
        for (long i = static_cast<long>(r.size()) - 1; i >= dg; --i) {
            C c = r[i];
            if (c == C(0)) continue;
            q[i - dg] = c;
            for (long j = 0; j <= dg; ++j) r[i - dg + j] -= c * g.coeffs[j];
        }
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    Polynomial derivative() const {
        if (coeffs.size() <= 1) return zero();
        std::vector<C> v(coeffs.size() - 1);
        for (std::size_t i = 1; i < coeffs.size(); ++i) v[i - 1] = coeffs[i] * C(static_cast<long>(i));
        return Polynomial(std::move(v));
    }

    template <typename T>
    T eval(const T& t) const {
        T acc{};
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + static_cast<T>(coeffs[i]);
        return acc;
    }

    double eval_double(double t) const {
        double acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + static_cast<double>(coeffs[i]);
        return acc;
    }
};

using IPoly = Polynomial<Int>;
using QPoly = Polynomial<Rational>;

inline QPoly to_qpoly(const IPoly& p) {
    std::vector<Rational> v(p.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(p.coeffs[i]);
    return QPoly(std::move(v));
}

}  // namespace tridess
