#include "tridess/dessin.hpp"

#include <algorithm>
#include <map>

namespace tridess {

Perm perm_inverse(const Perm& p) {
    Perm inv(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

unsigned cycle_count(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    unsigned c = 0;
    for (std::uint32_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::uint32_t j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return c;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::map<std::uint32_t, std::uint32_t> counts;
    for (std::uint32_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::uint32_t len = 0;
        for (std::uint32_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        ++counts[len];
    }
    return {counts.begin(), counts.end()};
}

Dessin regular_dessin(const CongruenceQuotient& G) {
    Dessin d;
    d.n = static_cast<std::uint32_t>(G.elements.size());
    d.sigma0.resize(d.n);
    d.sigma1.resize(d.n);
    d.sigma_inf.resize(d.n);
    const ResidueExt& E = *G.ext;
    for (std::uint32_t h = 0; h < d.n; ++h) {
        d.sigma0[h] = G.position(mat_mul(E, G.elements[h], G.gen_x));
        d.sigma1[h] = G.position(mat_mul(E, G.elements[h], G.gen_y));
        d.sigma_inf[h] = G.position(mat_mul(E, G.elements[h], G.gen_z));
    }
    return d;
}

Passport passport(const Dessin& d) {
    return {cycle_type(d.sigma0), cycle_type(d.sigma1), cycle_type(d.sigma_inf)};
}

bool is_transitive(const Dessin& d) {
    if (d.n == 0) return false;
    Perm inv0 = perm_inverse(d.sigma0), inv1 = perm_inverse(d.sigma1);
    std::vector<bool> seen(d.n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::uint32_t reached = 1;
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        const Perm* moves[4] = {&d.sigma0, &d.sigma1, &inv0, &inv1};
        for (const Perm* s : moves) {
            std::uint32_t v = (*s)[u];
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == d.n;
}

long genus(const Dessin& d) {
    long chi = static_cast<long>(cycle_count(d.sigma0)) + cycle_count(d.sigma1) +
               cycle_count(d.sigma_inf) - static_cast<long>(d.n);
    if ((2 - chi) % 2 != 0) throw internal_error("genus: parity violation");
    return (2 - chi) / 2;
}

EulerThetaReport euler_theta_report(const Dessin& d, const Signature& sig,
                                    const CongruenceQuotient& G) {
    EulerThetaReport r;
    r.genus = genus(d);
    r.cusps = 0;
    if (is_inf(sig.p)) r.cusps += cycle_count(d.sigma0);
    if (is_inf(sig.q)) r.cusps += cycle_count(d.sigma1);
    if (is_inf(sig.r)) r.cusps += cycle_count(d.sigma_inf);
    r.chi_open = 2 - 2 * r.genus - static_cast<long>(r.cusps);
    r.theta_exists = r.cusps % 2 == 0;
    if (r.theta_exists) r.theta_degree = -r.chi_open / 2;
    r.theta_count_log2 = static_cast<unsigned>(2 * r.genus);
    r.torsion_free = true;
    if (!is_inf(sig.p) && G.ord_x != static_cast<unsigned>(sig.p)) r.torsion_free = false;
    if (!is_inf(sig.q) && G.ord_y != static_cast<unsigned>(sig.q)) r.torsion_free = false;
    if (!is_inf(sig.r) && G.ord_z != static_cast<unsigned>(sig.r)) r.torsion_free = false;
    return r;
}

bool genus_crosscheck(const Dessin& d, const Signature& /*sig*/, const CongruenceQuotient& G) {
    Rational chi = Rational(d.n) * (Rational(1, G.ord_x) + Rational(1, G.ord_y) +
                                    Rational(1, G.ord_z) - 1);
    return chi == Rational(2 - 2 * genus(d));
}

bool is_isomorphic(const Dessin& d1, const Dessin& d2) {
    if (d1.n != d2.n) return false;
    if (!(passport(d1) == passport(d2))) return false;
    Perm inv0 = perm_inverse(d1.sigma0), inv1 = perm_inverse(d1.sigma1);
    Perm pinv0 = perm_inverse(d2.sigma0), pinv1 = perm_inverse(d2.sigma1);
    const std::uint32_t none = d1.n;
    for (std::uint32_t t = 0; t < d2.n; ++t) {
        // try phi(0) = t, propagate along Schreier words
        std::vector<std::uint32_t> phi(d1.n, none);
        std::vector<bool> used(d2.n, false);
        phi[0] = t;
        used[t] = true;
        std::vector<std::uint32_t> stack{0};
        bool ok = true;
        while (ok && !stack.empty()) {
            std::uint32_t u = stack.back();
            stack.pop_back();
            const Perm* moves1[4] = {&d1.sigma0, &d1.sigma1, &inv0, &inv1};
            const Perm* moves2[4] = {&d2.sigma0, &d2.sigma1, &pinv0, &pinv1};
            for (int k = 0; k < 4; ++k) {
                std::uint32_t nu = (*moves1[k])[u];
                std::uint32_t nv = (*moves2[k])[phi[u]];
                if (phi[nu] == none) {
                    if (used[nv]) {
                        ok = false;
                        break;
                    }
                    phi[nu] = nv;
                    used[nv] = true;
                    stack.push_back(nu);
                } else if (phi[nu] != nv) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace tridess
