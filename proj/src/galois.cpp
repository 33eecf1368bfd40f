#include "tridess/galois.hpp"

#include <algorithm>

namespace tridess {

std::vector<std::vector<unsigned>> orbits(const TraceFieldPtr& field, u64 ell) {
    auto primes = split_prime(field, ell);
    auto autos = galois_group(field);
    unsigned n = static_cast<unsigned>(primes.size());

    auto find_index = [&](const PrimeIdeal& p) {
        for (unsigned i = 0; i < n; ++i)
            if (primes[i].same_ideal(p)) return i;
        throw internal_error("orbits: image prime not in split list");
    };

    std::vector<bool> placed(n, false);
    std::vector<std::vector<unsigned>> out;
    for (unsigned i = 0; i < n; ++i) {
        if (placed[i]) continue;
        std::vector<unsigned> orbit;
        for (const auto& tau : autos) {
            unsigned j = find_index(galois_on_prime(tau, primes[i]));
            if (!placed[j]) {
                placed[j] = true;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

OrbitReport verify_theorem_c(const Signature& sig, u64 ell, std::size_t max_order, bool force) {
    OrbitReport rep;
    rep.sig = sig;
    rep.ell = ell;
    auto field = trace_field(sig);
    rep.primes = split_prime(field, ell);
    rep.orbits = orbits(field, ell);

    std::vector<Dessin> dessins;
    for (const auto& p : rep.primes) {
        CongruenceQuotient G = congruence_quotient(sig, p, max_order, force);
        Dessin d = regular_dessin(G);
        EulerThetaReport et = euler_theta_report(d, sig, G);
        rep.per_ideal.push_back(
            IdealInvariants{G.order(), passport(d), et.genus, et.cusps, et.torsion_free});
        dessins.push_back(std::move(d));
    }

    rep.verdict = true;
    for (const auto& orbit : rep.orbits) {
        for (unsigned idx : orbit)
            if (!(rep.per_ideal[idx] == rep.per_ideal[orbit.front()])) rep.verdict = false;
        std::vector<std::vector<bool>> iso(orbit.size(), std::vector<bool>(orbit.size(), false));
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (std::size_t j = i; j < orbit.size(); ++j) {
                bool eq = i == j || is_isomorphic(dessins[orbit[i]], dessins[orbit[j]]);
                iso[i][j] = iso[j][i] = eq;
            }
        rep.iso_matrix.push_back(std::move(iso));
    }
    return rep;
}

}  // namespace tridess
