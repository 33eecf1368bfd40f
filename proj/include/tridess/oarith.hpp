#pragma once

#include <vector>

#include "tridess/ff.hpp"
#include "tridess/qfield.hpp"

namespace tridess {

/// Prime ideal of the trace field above a rational prime ell, encoded by an
/// irreducible factor of k_minpoly mod ell (Dedekind). Only "regular" primes
/// are supported: ell coprime to disc(k_minpoly) and to all denominators of
/// the generator traces in gamma-coordinates.
struct PrimeIdeal {
    TraceFieldPtr field;
    u64 ell = 0;
    FpPoly local_factor;  // monic irreducible over F_ell
    unsigned f = 1;       // residue degree = deg(local_factor)
    ResidueFieldPtr residue;

    bool same_ideal(const PrimeIdeal& o) const {
        return ell == o.ell && local_factor == o.local_factor;
    }
};

/// Throws unsupported_prime_error unless ell is regular for the field.
void check_regular(const TraceFieldPtr& field, u64 ell);

/// All primes above ell, one per irreducible factor of k_minpoly mod ell,
/// sorted by (f, lexicographic coefficients of the local factor).
std::vector<PrimeIdeal> split_prime(const TraceFieldPtr& field, u64 ell);

/// Reduction 0_K -> F_q sending gamma to the class of x. Throws
/// reduction_error if a denominator is divisible by ell.
FFElem reduce(const KElement& a, const PrimeIdeal& p);

/// The prime tau(p): the unique prime above the same ell whose local factor
/// absorbs the image of p's local factor under gamma -> tau(gamma).
PrimeIdeal galois_on_prime(const Automorphism& tau, const PrimeIdeal& p);

}  // namespace tridess
