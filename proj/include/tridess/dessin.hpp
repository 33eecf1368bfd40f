#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tridess/tri.hpp"

namespace tridess {

using Perm = std::vector<std::uint32_t>;

Perm perm_inverse(const Perm& p);
unsigned cycle_count(const Perm& p);
/// Cycle type as (length, count) pairs, ascending by length.
std::vector<std::pair<std::uint32_t, std::uint32_t>> cycle_type(const Perm& p);

/// Transitive permutation triple with sigma0 sigma1 sigma_inf = id
/// (composing left to right).
struct Dessin {
    std::uint32_t n = 0;
    Perm sigma0, sigma1, sigma_inf;
};

struct Passport {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> over0, over1, overinf;
    bool operator==(const Passport&) const = default;
};

struct EulerThetaReport {
    long genus = 0;
    unsigned cusps = 0;
    long chi_open = 0;  // 2 - 2g - cusps
    bool theta_exists = false;
    std::optional<long> theta_degree;  // -chi_open/2 when present
    unsigned theta_count_log2 = 0;     // 2g
    bool torsion_free = false;
};

/// Monodromy of the regular cover: darts are group elements in BFS order,
/// sigma_i acts by right multiplication by the corresponding generator.
Dessin regular_dessin(const CongruenceQuotient& G);

Passport passport(const Dessin& d);

bool is_transitive(const Dessin& d);

/// Genus from the Euler characteristic 2 - 2g = c0 + c1 + cinf - n.
long genus(const Dessin& d);

EulerThetaReport euler_theta_report(const Dessin& d, const Signature& sig,
                                    const CongruenceQuotient& G);

/// Independent genus oracle: 2 - 2g = n (1/o_x + 1/o_y + 1/o_z - 1) with the
/// actual projective generator orders. True iff it agrees with genus(d).
bool genus_crosscheck(const Dessin& d, const Signature& sig, const CongruenceQuotient& G);

/// Dessin isomorphism: a relabeling commuting with sigma0 and sigma1.
/// Base-point transporter search; passport inequality short-circuits.
bool is_isomorphic(const Dessin& d1, const Dessin& d2);

}  // namespace tridess
