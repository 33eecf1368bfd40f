#include "tridess/oarith.hpp"

#include <string>

namespace tridess {

namespace {

bool divides_denominator(const std::vector<Rational>& coords, u64 ell) {
    for (const auto& c : coords)
        if (den(c) % Int(ell) == 0) return true;
    return false;
}

// coefficient vector of a K-element mod ell; throws on bad denominators
FpPoly kelement_mod(const KElement& a, u64 ell) {
    FpPoly p(a.coords.size(), 0);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        Int d = den(a.coords[i]) % Int(ell);
        if (d == 0) throw reduction_error("denominator divisible by ell");
        Int n = num(a.coords[i]) % Int(ell);
        if (n < 0) n += Int(ell);
        p[i] = mulmod(n.convert_to<u64>(), invmod(d.convert_to<u64>(), ell), ell);
    }
    fp_normalize(p);
    return p;
}

}  // namespace

void check_regular(const TraceFieldPtr& field, u64 ell) {
    FpPoly fbar = fp_from_ipoly(field->k_minpoly(), ell);
    if (fp_degree(fbar) != static_cast<long>(field->degree()))
        throw unsupported_prime_error("prime " + std::to_string(ell) + " not supported");
    FpPoly g = fp_gcd(fbar, fp_derivative(fbar, ell), ell);
    if (fp_degree(g) != 0)
        throw unsupported_prime_error("prime " + std::to_string(ell) +
                                      " divides disc(k_minpoly); not supported");
    for (int s : field->signature().entries()) {
        if (is_inf(s)) continue;
        if (divides_denominator(field->lambda_k(s).coords, ell))
            throw unsupported_prime_error("prime " + std::to_string(ell) +
                                          " divides a trace denominator; not supported");
    }
}

std::vector<PrimeIdeal> split_prime(const TraceFieldPtr& field, u64 ell) {
    check_regular(field, ell);
    FpPoly fbar = fp_from_ipoly(field->k_minpoly(), ell);
    std::vector<FpPoly> factors = factor_squarefree(fbar, ell);
    std::vector<PrimeIdeal> out;
    unsigned total = 0;
    for (auto& g : factors) {
        PrimeIdeal p;
        p.field = field;
        p.ell = ell;
        p.local_factor = g;
        p.f = static_cast<unsigned>(fp_degree(g));
        p.residue = ResidueField::create(ell, g);
        total += p.f;
        out.push_back(std::move(p));
    }
    if (total != field->degree()) throw internal_error("split_prime: degrees do not sum to d");
    return out;
}

FFElem reduce(const KElement& a, const PrimeIdeal& p) {
    return p.residue->from_poly(kelement_mod(a, p.ell));
}

PrimeIdeal galois_on_prime(const Automorphism& tau, const PrimeIdeal& p) {
    auto candidates = split_prime(p.field, p.ell);
    FpPoly tau_poly = kelement_mod(tau.gamma_image, p.ell);
    const PrimeIdeal* hit = nullptr;
    for (const auto& cand : candidates) {
        const ResidueField& R = *cand.residue;
        FFElem t = R.from_poly(tau_poly);
        // g_p(tau_poly(x)) mod (ell, g_cand)
        FFElem acc = R.zero();
        for (std::size_t i = p.local_factor.size(); i-- > 0;) {
            acc = R.mul(acc, t);
            acc = R.add(acc, R.from_int(static_cast<long>(p.local_factor[i])));
        }
        if (R.is_zero(acc)) {
            if (hit) throw internal_error("galois_on_prime: multiple candidates match");
            hit = &cand;
        }
    }
    if (!hit) throw internal_error("galois_on_prime: no candidate matches");
    return *hit;
}

}  // namespace tridess
