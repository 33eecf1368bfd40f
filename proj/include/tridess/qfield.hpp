#pragma once

#include <memory>
#include <vector>

#include "tridess/poly.hpp"
#include "tridess/signature.hpp"

namespace tridess {

/// Minimal polynomial of 2cos(pi/m) over Q, monic with integer coefficients.
/// Degree phi(2m)/2 for m >= 2; x + 2 for m = 1.
IPoly cos_minpoly(unsigned m);

/// n-th cyclotomic polynomial.
IPoly cyclotomic(unsigned n);

/// Dickson polynomial D_k: D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
/// Satisfies D_k(2cos a) = 2cos(ka).
IPoly dickson(unsigned k);

class AmbientField;
using AmbientFieldPtr = std::shared_ptr<const AmbientField>;

/// The real cyclotomic field Q(psi), psi = 2cos(pi/m). Abelian over Q, so its
/// Galois theory is residue arithmetic mod 2m: sigma_k sends psi to 2cos(k pi/m).
class AmbientField : public std::enable_shared_from_this<AmbientField> {
  public:
    static AmbientFieldPtr create(unsigned m);

    unsigned m() const { return m_; }
    const IPoly& psi_minpoly() const { return psi_minpoly_; }
    unsigned degree() const { return static_cast<unsigned>(psi_minpoly_.degree()); }
    double psi_numeric() const { return psi_numeric_; }

    /// Reduce a cosine index to the canonical range [0, m]:
    /// 2cos(t pi/m) depends only on t mod 2m up to t <-> 2m - t.
    unsigned reduce_index(long t) const;

    /// Integer psi-power coordinates of the cosine basis element C_t:
    /// C_0 = 1 and C_t = 2cos(t pi/m) for t in [1, m].
    const std::vector<Int>& basis_coords(unsigned t) const { return cos_table_[t]; }

  private:
    explicit AmbientField(unsigned m);

    unsigned m_;
    IPoly psi_minpoly_;
    double psi_numeric_;
    std::vector<std::vector<Int>> cos_table_;  // t = 0..m
};

/// Element of an AmbientField: polynomial in psi of degree < deg, rational coords.
struct AmbientElement {
    AmbientFieldPtr field;
    std::vector<Rational> coords;  // length = field->degree()

    static AmbientElement zero(AmbientFieldPtr f);
    static AmbientElement constant(AmbientFieldPtr f, const Rational& c);
    static AmbientElement from_int_coords(AmbientFieldPtr f, const std::vector<Int>& v);

    bool operator==(const AmbientElement& o) const { return coords == o.coords; }
    AmbientElement operator+(const AmbientElement& o) const;
    AmbientElement operator-(const AmbientElement& o) const;
    AmbientElement operator*(const AmbientElement& o) const;
    AmbientElement operator*(const Rational& c) const;

    bool is_rational() const;
    bool is_zero() const;

    /// Image under sigma_k (psi -> 2cos(k pi/m)), k coprime to 2m.
    AmbientElement galois_image(long k) const;

    double eval_numeric() const;
};

/// 2cos(pi/s) as an element of the ambient field; s = kInf gives the constant 2.
/// Requires s | m for finite s.
AmbientElement lambda_element(const AmbientFieldPtr& field, int s);

class TraceField;
using TraceFieldPtr = std::shared_ptr<const TraceField>;

/// Element of a trace field in the power basis of the primitive element gamma.
struct KElement {
    TraceFieldPtr field;
    std::vector<Rational> coords;  // length d

    bool operator==(const KElement& o) const { return coords == o.coords; }
    KElement operator+(const KElement& o) const;
    KElement operator*(const KElement& o) const;

    /// Inclusion K -> ambient field.
    AmbientElement to_ambient() const;
};

/// Automorphism of K, given by a residue class k (acting on the ambient field)
/// together with its action on gamma in gamma-coordinates.
struct Automorphism {
    long k = 1;  // canonical residue representative in (Z/2m)^x / {+-1}
    KElement gamma_image;

    bool is_identity() const { return k == 1; }
};

/// The trace field K_{p,q,r} = Q(cos pi/p, cos pi/q, cos pi/r), presented by a
/// primitive element gamma inside the ambient field with m = lcm of the finite
/// signature entries.
class TraceField : public std::enable_shared_from_this<TraceField> {
  public:
    static TraceFieldPtr create(const Signature& sig);

    const Signature& signature() const { return sig_; }
    const AmbientFieldPtr& ambient() const { return ambient_; }
    const AmbientElement& gamma() const { return gamma_; }
    const IPoly& k_minpoly() const { return k_minpoly_; }
    unsigned degree() const { return d_; }
    const std::vector<long>& fixing_group() const { return fixing_group_; }
    const std::vector<long>& galois_reps() const { return galois_reps_; }

    double gamma_numeric() const { return gamma_.eval_numeric(); }

    bool fixes(long k, const AmbientElement& x) const;
    bool is_h_fixed(const AmbientElement& x) const;

    KElement element(std::vector<Rational> coords) const;
    KElement zero_element() const;
    KElement gamma_element() const;

    /// lambda_{2s} = 2cos(pi/s) in gamma-coordinates.
    KElement lambda_k(int s) const;

  private:
    TraceField() = default;

    Signature sig_;
    AmbientFieldPtr ambient_;
    AmbientElement gamma_{};
    IPoly k_minpoly_;
    unsigned d_ = 1;
    std::vector<long> fixing_group_;  // H, canonical reps, sorted
    std::vector<long> galois_reps_;   // coset reps of H, identity first
};

/// Convenience wrapper around TraceField::create.
TraceFieldPtr trace_field(const Signature& sig);

/// Gal(K/Q) as a list of d automorphisms, identity first, closed under
/// composition (the composite of reps k1, k2 is the rep of k1*k2).
std::vector<Automorphism> galois_group(const TraceFieldPtr& field);

/// Composition tau1 after tau2 inside galois_group output.
long compose_residues(const TraceFieldPtr& field, long k1, long k2);

/// Express an H-fixed ambient element in the basis 1, gamma, ..., gamma^{d-1}.
/// Throws not_in_subfield_error if x is not fixed by H.
KElement to_k_coordinates(const AmbientElement& x, const TraceFieldPtr& field);

}  // namespace tridess
