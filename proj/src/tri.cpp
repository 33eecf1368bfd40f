#include "tridess/tri.hpp"

#include <deque>
#include <string>

namespace tridess {

TraceTriple trace_triple(const Signature& sig, const PrimeIdeal& p, bool force) {
    if (!force) {
        if (p.ell == 2)
            throw unsupported_prime_error("ell = 2 requires --force");
        for (int s : sig.entries())
            if (!is_inf(s) && static_cast<u64>(s) % p.ell == 0)
                throw unsupported_prime_error("ell = " + std::to_string(p.ell) +
                                              " divides a signature entry; use --force");
    }
    TraceTriple t;
    t.residue = p.residue;
    t.ell = p.ell;
    auto beta = [&](int s) {
        if (is_inf(s)) return p.residue->from_int(2);
        return reduce(p.field->lambda_k(s), p);
    };
    t.beta_p = beta(sig.p);
    t.beta_q = beta(sig.q);
    t.beta_r = beta(sig.r);
    return t;
}

unsigned expected_order(int s, u64 ell) {
    return is_inf(s) ? static_cast<unsigned>(ell) : static_cast<unsigned>(s);
}

ProjMatrix canonical(const ResidueExt& E, ProjMatrix M) {
    for (const ExtElem* e : {&M.a, &M.b, &M.c, &M.d}) {
        if (!E.is_zero(*e)) {
            ExtElem inv = E.inv(*e);
            return {E.mul(M.a, inv), E.mul(M.b, inv), E.mul(M.c, inv), E.mul(M.d, inv)};
        }
    }
    throw internal_error("canonical: zero matrix");
}

ProjMatrix mat_mul(const ResidueExt& E, const ProjMatrix& x, const ProjMatrix& y) {
    ProjMatrix m{E.add(E.mul(x.a, y.a), E.mul(x.b, y.c)), E.add(E.mul(x.a, y.b), E.mul(x.b, y.d)),
                 E.add(E.mul(x.c, y.a), E.mul(x.d, y.c)), E.add(E.mul(x.c, y.b), E.mul(x.d, y.d))};
    return canonical(E, m);
}

ProjMatrix mat_inv(const ResidueExt& E, const ProjMatrix& m) {
    // the adjugate is a projective inverse
    return canonical(E, ProjMatrix{m.d, E.neg(m.b), E.neg(m.c), m.a});
}

ProjMatrix mat_identity(const ResidueExt& E) {
    return {E.one(), E.zero(), E.zero(), E.one()};
}

bool mat_is_identity(const ResidueExt& E, const ProjMatrix& m) {
    return m == mat_identity(E);
}

ExtElem mat_det(const ResidueExt& E, const ProjMatrix& m) {
    return E.sub(E.mul(m.a, m.d), E.mul(m.b, m.c));
}

unsigned proj_order(const ResidueExt& E, const ProjMatrix& m, unsigned cap) {
    ProjMatrix p = canonical(E, m);
    ProjMatrix id = mat_identity(E);
    unsigned k = 1;
    while (!(p == id)) {
        p = mat_mul(E, p, m);
        if (++k > cap) throw internal_error("proj_order: cap exceeded");
    }
    return k;
}

std::pair<ProjMatrix, ProjMatrix> macbeath_triple(const ResidueExtPtr& ext, const TraceTriple& t,
                                                  bool flip_sign) {
    const ResidueExt& E = *ext;
    const ResidueField& F = *ext->base();

    // xi^2 - tr(AB) xi + 1 = 0 with tr(AB) = -beta_r.  The retry replaces B by its
    // other SL2 lift -B, which negates both tr(B) and tr(AB) and leaves the
    // projective triple class unchanged.
    FFElem tr_ab = flip_sign ? t.beta_r : F.neg(t.beta_r);
    FFElem tr_b = flip_sign ? F.neg(t.beta_q) : t.beta_q;
    FFElem disc = F.sub(F.mul(tr_ab, tr_ab), F.from_int(4));
    ExtElem half = E.embed(F.inv(F.from_int(2)));
    ExtElem root;
    if (auto r = F.sqrt(disc)) {
        root = E.embed(*r);
    } else {
        root = E.sqrt_of_base(disc);
    }
    ExtElem tr = E.embed(tr_ab);
    ExtElem xi1 = E.mul(E.add(tr, root), half);
    ExtElem xi2 = E.mul(E.sub(tr, root), half);
    ExtElem xi = std::min(xi1, xi2);

    ProjMatrix A{E.embed(t.beta_p), E.from_int(-1), E.one(), E.zero()};
    ProjMatrix B{E.zero(), xi, E.neg(E.inv(xi)), E.embed(tr_b)};
    return {canonical(E, A), canonical(E, B)};
}

std::uint32_t CongruenceQuotient::position(const ProjMatrix& m) const {
    auto it = index.find(m);
    if (it == index.end()) throw internal_error("CongruenceQuotient: element not in group");
    return it->second;
}

namespace {

bool orders_match(const ResidueExt& E, const ProjMatrix& A, const ProjMatrix& B,
                  const Signature& sig, u64 ell, unsigned& ox, unsigned& oy, unsigned& oz) {
    ProjMatrix AB = mat_mul(E, A, B);
    ox = proj_order(E, A);
    oy = proj_order(E, B);
    oz = proj_order(E, AB);
    return ox == expected_order(sig.p, ell) && oy == expected_order(sig.q, ell) &&
           oz == expected_order(sig.r, ell);
}

}  // namespace

std::optional<CongruenceQuotient> congruence_quotient_with_sign(const Signature& sig,
                                                                const PrimeIdeal& p, bool flip_sign,
                                                                std::size_t max_order, bool force) {
    TraceTriple t = trace_triple(sig, p, force);
    ResidueExtPtr ext = ResidueExt::create(p.residue);
    const ResidueExt& E = *ext;

    auto [A, B] = macbeath_triple(ext, t, flip_sign);
    unsigned ox, oy, oz;
    if (!orders_match(E, A, B, sig, p.ell, ox, oy, oz)) return std::nullopt;

    CongruenceQuotient G;
    G.sig = sig;
    G.prime = p;
    G.ext = ext;
    G.gen_x = A;
    G.gen_y = B;
    G.gen_z = mat_inv(E, mat_mul(E, A, B));
    G.ord_x = ox;
    G.ord_y = oy;
    G.ord_z = oz;

    const ProjMatrix gens[4] = {A, B, mat_inv(E, A), mat_inv(E, B)};
    ProjMatrix id = mat_identity(E);
    G.elements.push_back(id);
    G.index.emplace(id, 0);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t i = queue.front();
        queue.pop_front();
        ProjMatrix cur = G.elements[i];
        for (const auto& g : gens) {
            ProjMatrix nxt = mat_mul(E, cur, g);
            auto [it, inserted] =
                G.index.emplace(nxt, static_cast<std::uint32_t>(G.elements.size()));
            if (inserted) {
                if (G.elements.size() >= max_order)
                    throw resource_error("group closure exceeds max order " +
                                         std::to_string(max_order));
                G.elements.push_back(nxt);
                queue.push_back(it->second);
            }
        }
    }
    if (G.elements.size() < 2) throw internal_error("congruence_quotient: trivial group");
    return G;
}

CongruenceQuotient congruence_quotient(const Signature& sig, const PrimeIdeal& p,
                                       std::size_t max_order, bool force) {
    if (auto G = congruence_quotient_with_sign(sig, p, false, max_order, force)) return *G;
    if (auto G = congruence_quotient_with_sign(sig, p, true, max_order, force)) return *G;
    throw internal_error("congruence_quotient: generator orders wrong for both trace signs");
}

}  // namespace tridess
