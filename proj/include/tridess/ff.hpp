#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tridess/poly.hpp"

namespace tridess {

// ---------------------------------------------------------------------------
// Arithmetic mod a word-sized prime ell, and polynomials over F_ell
// (coefficient vectors ascending by degree, trailing zeros stripped).
// ---------------------------------------------------------------------------

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 ell);
u64 powmod(u64 a, u64 e, u64 ell);
u64 invmod(u64 a, u64 ell);

void fp_normalize(FpPoly& f);
long fp_degree(const FpPoly& f);
FpPoly fp_add(const FpPoly& a, const FpPoly& b, u64 ell);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 ell);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 ell);
FpPoly fp_scale(const FpPoly& a, u64 c, u64 ell);
FpPoly fp_mod(FpPoly a, const FpPoly& g, u64 ell);
FpPoly fp_monic(FpPoly f, u64 ell);
FpPoly fp_gcd(FpPoly a, FpPoly b, u64 ell);  // monic
FpPoly fp_derivative(const FpPoly& f, u64 ell);
FpPoly fp_powmod(FpPoly base, const Int& e, const FpPoly& g, u64 ell);

/// Reduce an integer polynomial mod ell.
FpPoly fp_from_ipoly(const IPoly& f, u64 ell);

/// Factor a squarefree monic polynomial over F_ell into monic irreducibles.
/// Distinct-degree then equal-degree (Cantor-Zassenhaus) splitting; the
/// random stream is seeded from (ell, coefficients) so the factor list is
/// reproducible. Sorted by (degree, lexicographic coefficient vector).
std::vector<FpPoly> factor_squarefree(const FpPoly& f, u64 ell);

// ---------------------------------------------------------------------------
// Residue field F_q = F_ell[x]/(modulus), q = ell^f.
// ---------------------------------------------------------------------------

/// Field element: coefficient vector of fixed length f (degree < f).
using FFElem = std::vector<u64>;

class ResidueField;
using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

class ResidueField : public std::enable_shared_from_this<ResidueField> {
  public:
    static ResidueFieldPtr create(u64 ell, FpPoly modulus);

    u64 ell() const { return ell_; }
    unsigned f() const { return f_; }
    u64 q() const { return q_; }
    const FpPoly& modulus() const { return modulus_; }

    FFElem zero() const { return FFElem(f_, 0); }
    FFElem one() const { return from_int(1); }
    FFElem from_int(long v) const;
    FFElem from_poly(FpPoly p) const;  // reduce mod modulus
    FFElem x() const;                  // class of x (= x mod modulus when f = 1)

    bool is_zero(const FFElem& a) const;
    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    FFElem inv(const FFElem& a) const;
    FFElem pow(FFElem a, u64 e) const;

    /// Deterministic total order: lexicographic on (c_0, ..., c_{f-1}).
    static bool less(const FFElem& a, const FFElem& b) { return a < b; }

    /// Element of given rank in the enumeration order (c_0 most significant).
    FFElem elem_at(u64 rank) const;

    /// Smallest square root in element order, if the argument is a square.
    std::optional<FFElem> sqrt(const FFElem& a) const;

  private:
    ResidueField(u64 ell, FpPoly modulus);

    u64 ell_;
    unsigned f_;
    u64 q_;
    FpPoly modulus_;
};

// ---------------------------------------------------------------------------
// Quadratic extension F_{q^2} = F_q[y]/(y^2 + a y + b), with the modulus the
// lexicographically smallest monic irreducible quadratic over the base.
// ---------------------------------------------------------------------------

struct ExtElem {
    FFElem u, v;  // u + v*y
    bool operator==(const ExtElem&) const = default;
    auto operator<=>(const ExtElem&) const = default;
};

class ResidueExt;
using ResidueExtPtr = std::shared_ptr<const ResidueExt>;

class ResidueExt : public std::enable_shared_from_this<ResidueExt> {
  public:
    /// Requires odd ell (the pipeline never builds extensions at ell = 2).
    static ResidueExtPtr create(ResidueFieldPtr base);

    const ResidueFieldPtr& base() const { return base_; }
    const FFElem& mod_a() const { return a_; }
    const FFElem& mod_b() const { return b_; }

    ExtElem zero() const { return {base_->zero(), base_->zero()}; }
    ExtElem one() const { return {base_->one(), base_->zero()}; }
    ExtElem embed(FFElem e) const { return {std::move(e), base_->zero()}; }
    ExtElem from_int(long v) const { return embed(base_->from_int(v)); }

    bool is_zero(const ExtElem& e) const { return base_->is_zero(e.u) && base_->is_zero(e.v); }
    ExtElem add(const ExtElem& x, const ExtElem& y) const;
    ExtElem sub(const ExtElem& x, const ExtElem& y) const;
    ExtElem neg(const ExtElem& x) const;
    ExtElem mul(const ExtElem& x, const ExtElem& y) const;
    ExtElem inv(const ExtElem& x) const;

    /// Square root of a base-field element inside the extension; always exists.
    /// Returns the smaller of the two roots in element order.
    ExtElem sqrt_of_base(const FFElem& s) const;

  private:
    explicit ResidueExt(ResidueFieldPtr base);

    ResidueFieldPtr base_;
    FFElem a_, b_;  // y^2 + a y + b
};

}  // namespace tridess
