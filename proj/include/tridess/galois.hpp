#pragma once

#include "tridess/dessin.hpp"

namespace tridess {

/// Galois-invariant per-ideal record; Theorem-C consistency means these agree
/// along each orbit.
struct IdealInvariants {
    std::size_t group_order = 0;
    Passport pass;
    long genus = 0;
    unsigned cusps = 0;
    bool torsion_free = false;
    bool operator==(const IdealInvariants&) const = default;
};

struct OrbitReport {
    Signature sig;
    u64 ell = 0;
    std::vector<PrimeIdeal> primes;             // split_prime order
    std::vector<std::vector<unsigned>> orbits;  // indices into primes
    std::vector<IdealInvariants> per_ideal;     // parallel to primes
    /// Per orbit: pairwise dessin isomorphism (diagonal true). Agreement is
    /// not required by Theorem C; conjugate dessins are typically distinct.
    std::vector<std::vector<std::vector<bool>>> iso_matrix;
    bool verdict = false;
};

/// Orbits of Gal(K/Q) acting on the primes above ell, as index lists into the
/// split_prime output; the orbit containing the smallest ideal comes first.
std::vector<std::vector<unsigned>> orbits(const TraceFieldPtr& field, u64 ell);

/// Builds the dessin at every prime above ell and checks that the invariant
/// record is constant along every Galois orbit.
OrbitReport verify_theorem_c(const Signature& sig, u64 ell, std::size_t max_order = 1000000,
                             bool force = false);

}  // namespace tridess
