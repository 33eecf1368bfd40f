#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tridess/oarith.hpp"
#include "tridess/signature.hpp"

namespace tridess {

/// Generator traces (2cos pi/p, 2cos pi/q, 2cos pi/r) reduced mod a prime
/// ideal; infinite entries reduce to 2 (parabolic convention).
struct TraceTriple {
    ResidueFieldPtr residue;
    FFElem beta_p, beta_q, beta_r;
    u64 ell = 0;
};

/// Component-wise reduction of the signature traces at p. Unless force is set,
/// requires ell coprime to 2 * (product of the finite entries).
TraceTriple trace_triple(const Signature& sig, const PrimeIdeal& p, bool force = false);

/// Order the generator image must have in the quotient: s for finite s,
/// ell for a parabolic entry.
unsigned expected_order(int s, u64 ell);

/// Element of PGL2 over the quadratic extension, stored in canonical form:
/// first nonzero entry in reading order scaled to 1.
struct ProjMatrix {
    ExtElem a, b, c, d;
    auto operator<=>(const ProjMatrix&) const = default;
};

ProjMatrix canonical(const ResidueExt& E, ProjMatrix M);
ProjMatrix mat_mul(const ResidueExt& E, const ProjMatrix& x, const ProjMatrix& y);
ProjMatrix mat_inv(const ResidueExt& E, const ProjMatrix& m);
ProjMatrix mat_identity(const ResidueExt& E);
bool mat_is_identity(const ResidueExt& E, const ProjMatrix& m);
ExtElem mat_det(const ResidueExt& E, const ProjMatrix& m);
unsigned proj_order(const ResidueExt& E, const ProjMatrix& m, unsigned cap = 1u << 24);

/// A = [[beta_p, -1], [1, 0]], B = [[0, xi], [-1/xi, beta_q]] with
/// xi + 1/xi = -beta_r, so that tr A = beta_p, tr B = beta_q, tr AB = -beta_r.
/// xi lives in the base field when x^2 + beta_r x + 1 splits, otherwise in the
/// quadratic extension; the smaller of the two roots is taken. When flip_sign
/// is set B is replaced by its other SL2 lift -B, i.e. tr B = -beta_q and
/// tr AB = +beta_r, which leaves the projective triple class unchanged.
std::pair<ProjMatrix, ProjMatrix> macbeath_triple(const ResidueExtPtr& ext, const TraceTriple& t,
                                                  bool flip_sign = false);

/// The finite congruence quotient: the projective matrix group generated by
/// the Macbeath triple, enumerated in deterministic BFS order (identity first).
struct CongruenceQuotient {
    Signature sig;
    PrimeIdeal prime;
    ResidueExtPtr ext;
    ProjMatrix gen_x, gen_y, gen_z;  // gen_x gen_y gen_z = identity
    unsigned ord_x = 0, ord_y = 0, ord_z = 0;  // projective generator orders
    std::vector<ProjMatrix> elements;
    std::map<ProjMatrix, std::uint32_t> index;

    std::uint32_t position(const ProjMatrix& m) const;
    std::size_t order() const { return elements.size(); }
};

/// Builds the quotient group by BFS closure of {A, B, A^-1, B^-1} under right
/// multiplication, verifying the projective generator orders. On an order
/// failure with the -beta_r sign the construction is retried once with
/// +beta_r; a failure of both signs is a construction error.
CongruenceQuotient congruence_quotient(const Signature& sig, const PrimeIdeal& p,
                                       std::size_t max_order = 1000000, bool force = false);

/// Single-sign variant: nullopt when the generator orders come out wrong for
/// the requested trace sign. The two signs, when both admissible, generate
/// the same projective triple up to conjugacy.
std::optional<CongruenceQuotient> congruence_quotient_with_sign(const Signature& sig,
                                                                const PrimeIdeal& p, bool flip_sign,
                                                                std::size_t max_order = 1000000,
                                                                bool force = false);

}  // namespace tridess
