#include "tridess/ff.hpp"

#include <algorithm>
#include <random>

#include "tridess/errors.hpp"

namespace tridess {

u64 mulmod(u64 a, u64 b, u64 ell) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % ell);
}

u64 powmod(u64 a, u64 e, u64 ell) {
    u64 r = 1 % ell;
    a %= ell;
    while (e) {
        if (e & 1) r = mulmod(r, a, ell);
        a = mulmod(a, a, ell);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 ell) {
    a %= ell;
    if (a == 0) throw internal_error("invmod: zero");
    // extended Euclid
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(ell), nr = static_cast<long long>(a);
    while (nr != 0) {
        long long qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw internal_error("invmod: not invertible");
    if (t < 0) t += static_cast<long long>(ell);
    return static_cast<u64>(t);
}

void fp_normalize(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long fp_degree(const FpPoly& f) { return static_cast<long>(f.size()) - 1; }

FpPoly fp_add(const FpPoly& a, const FpPoly& b, u64 ell) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + y) % ell;
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 ell) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + ell - y) % ell;
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 ell) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], ell)) % ell;
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_scale(const FpPoly& a, u64 c, u64 ell) {
    FpPoly r = a;
    for (auto& x : r) x = mulmod(x, c % ell, ell);
    fp_normalize(r);
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& g, u64 ell) {
    if (g.empty()) throw internal_error("fp_mod: division by zero");
    u64 linv = invmod(g.back(), ell);
    while (a.size() >= g.size()) {
        u64 c = mulmod(a.back(), linv, ell);
        if (c != 0) {
            std::size_t off = a.size() - g.size();
            for (std::size_t j = 0; j < g.size(); ++j)
                a[off + j] = (a[off + j] + ell - mulmod(c, g[j], ell)) % ell;
        }
        a.pop_back();
        fp_normalize(a);
        if (a.size() < g.size()) break;
    }
    fp_normalize(a);
    return a;
}

FpPoly fp_monic(FpPoly f, u64 ell) {
    fp_normalize(f);
    if (f.empty()) return f;
    return fp_scale(f, invmod(f.back(), ell), ell);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 ell) {
    fp_normalize(a);
    fp_normalize(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, ell);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(std::move(a), ell);
}

FpPoly fp_derivative(const FpPoly& f, u64 ell) {
    if (f.size() <= 1) return {};
    FpPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], i % ell, ell);
    fp_normalize(r);
    return r;
}

FpPoly fp_powmod(FpPoly base, const Int& e, const FpPoly& g, u64 ell) {
    FpPoly r{1 % ell};
    fp_normalize(r);
    base = fp_mod(std::move(base), g, ell);
    Int exp = e;
    while (exp > 0) {
        if ((exp & 1) != 0) r = fp_mod(fp_mul(r, base, ell), g, ell);
        base = fp_mod(fp_mul(base, base, ell), g, ell);
        exp >>= 1;
    }
    return r;
}

FpPoly fp_from_ipoly(const IPoly& f, u64 ell) {
    FpPoly r(f.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int c = f.coeffs[i] % Int(ell);
        if (c < 0) c += Int(ell);
        r[i] = c.convert_to<u64>();
    }
    fp_normalize(r);
    return r;
}

namespace {

FpPoly fp_quotient(const FpPoly& f, const FpPoly& g, u64 ell) {
    if (fp_degree(f) < fp_degree(g)) return {};
    FpPoly a = f, q(f.size() - g.size() + 1, 0);
    u64 linv = invmod(g.back(), ell);
    for (long i = static_cast<long>(f.size()) - 1; i >= static_cast<long>(g.size()) - 1; --i) {
        u64 c = mulmod(a[i], linv, ell);
        if (c == 0) continue;
        long off = i - (static_cast<long>(g.size()) - 1);
        q[off] = c;
        for (std::size_t j = 0; j < g.size(); ++j)
            a[off + j] = (a[off + j] + ell - mulmod(c, g[j], ell)) % ell;
    }
    fp_normalize(q);
    return q;
}

Int ipow(u64 base, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// Equal-degree splitting of a monic squarefree product of degree-d irreducibles.
void edf(const FpPoly& f, unsigned d, u64 ell, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    unsigned deg = static_cast<unsigned>(fp_degree(f));
    if (deg == d) {
        out.push_back(f);
        return;
    }
    while (true) {
        FpPoly a(deg);
        for (auto& c : a) c = rng() % ell;
        fp_normalize(a);
        if (fp_degree(a) < 1) continue;
        FpPoly g;
        if (ell == 2) {
            // trace map over F_{2^d}
            FpPoly t = a, cur = a;
            for (unsigned i = 1; i < d; ++i) {
                cur = fp_mod(fp_mul(cur, cur, ell), f, ell);
                t = fp_add(t, cur, ell);
            }
            g = fp_gcd(f, t, ell);
        } else {
            Int e = (ipow(ell, d) - 1) / 2;
            FpPoly t = fp_powmod(a, e, f, ell);
            if (!t.empty()) t[0] = (t[0] + ell - 1) % ell;
            fp_normalize(t);
            g = fp_gcd(f, t, ell);
        }
        long dg = fp_degree(g);
        if (dg <= 0 || dg == fp_degree(f)) continue;
        auto rest = fp_monic(fp_quotient(f, g, ell), ell);
        edf(g, d, ell, rng, out);
        edf(rest, d, ell, rng, out);
        return;
    }
}

}  // namespace

std::vector<FpPoly> factor_squarefree(const FpPoly& f_in, u64 ell) {
    FpPoly f = fp_monic(f_in, ell);
    if (fp_degree(f) < 1) throw internal_error("factor_squarefree: constant input");

    // deterministic seed from (ell, coefficients)
    u64 seed = 0x9e3779b97f4a7c15ull ^ ell;
    for (u64 c : f) seed = seed * 0x100000001b3ull + c + 1;
    std::mt19937_64 rng(seed);

    std::vector<FpPoly> factors;
    FpPoly rem = f;
    FpPoly h{0, 1};  // x
    FpPoly x{0, 1};
    unsigned d = 0;
    while (fp_degree(rem) > 0) {
        ++d;
        if (2 * static_cast<long>(d) > fp_degree(rem)) {
            factors.push_back(rem);
            break;
        }
        // h = x^(ell^d) mod rem
        h = fp_powmod(std::move(h), Int(ell), rem, ell);
        FpPoly g = fp_gcd(rem, fp_sub(h, x, ell), ell);
        if (fp_degree(g) > 0) {
            edf(g, d, ell, rng, factors);
            rem = fp_monic(fp_quotient(rem, g, ell), ell);
            h = fp_mod(h, rem, ell);
        }
    }
    std::sort(factors.begin(), factors.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return factors;
}

// ---------------------------------------------------------------------------

ResidueField::ResidueField(u64 ell, FpPoly modulus) : ell_(ell), modulus_(std::move(modulus)) {
    fp_normalize(modulus_);
    f_ = static_cast<unsigned>(fp_degree(modulus_));
    if (f_ < 1 || modulus_.back() != 1) throw internal_error("ResidueField: bad modulus");
    q_ = 1;
    for (unsigned i = 0; i < f_; ++i) {
        if (q_ > (u64(1) << 40)) throw resource_error("ResidueField: q too large");
        q_ *= ell_;
    }
}

ResidueFieldPtr ResidueField::create(u64 ell, FpPoly modulus) {
    return ResidueFieldPtr(new ResidueField(ell, std::move(modulus)));
}

FFElem ResidueField::from_int(long v) const {
    long long m = static_cast<long long>(v) % static_cast<long long>(ell_);
    if (m < 0) m += static_cast<long long>(ell_);
    FFElem e(f_, 0);
    e[0] = static_cast<u64>(m);
    return e;
}

FFElem ResidueField::from_poly(FpPoly p) const {
    for (auto& c : p) c %= ell_;
    fp_normalize(p);
    p = fp_mod(std::move(p), modulus_, ell_);
    p.resize(f_, 0);
    return p;
}

FFElem ResidueField::x() const {
    FpPoly p{0, 1};
    return from_poly(std::move(p));
}

bool ResidueField::is_zero(const FFElem& a) const {
    return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

FFElem ResidueField::add(const FFElem& a, const FFElem& b) const {
    FFElem r(f_);
    for (unsigned i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) % ell_;
    return r;
}

FFElem ResidueField::sub(const FFElem& a, const FFElem& b) const {
    FFElem r(f_);
    for (unsigned i = 0; i < f_; ++i) r[i] = (a[i] + ell_ - b[i]) % ell_;
    return r;
}

FFElem ResidueField::neg(const FFElem& a) const { return sub(zero(), a); }

FFElem ResidueField::mul(const FFElem& a, const FFElem& b) const {
    FpPoly pa(a.begin(), a.end()), pb(b.begin(), b.end());
    fp_normalize(pa);
    fp_normalize(pb);
    FpPoly r = fp_mod(fp_mul(pa, pb, ell_), modulus_, ell_);
    r.resize(f_, 0);
    return r;
}

FFElem ResidueField::inv(const FFElem& a) const {
    if (is_zero(a)) throw internal_error("ResidueField::inv: zero");
    // extended Euclid in F_ell[x]
    FpPoly r0 = modulus_, r1(a.begin(), a.end());
    fp_normalize(r1);
    FpPoly t0{}, t1{1};
    while (!r1.empty()) {
        // r0 = q r1 + r
        FpPoly q = fp_quotient(r0, r1, ell_);
        FpPoly r = fp_sub(r0, fp_mul(q, r1, ell_), ell_);
        FpPoly t = fp_sub(t0, fp_mul(q, t1, ell_), ell_);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (fp_degree(r0) != 0) throw internal_error("ResidueField::inv: not invertible");
    FpPoly t = fp_scale(t0, invmod(r0[0], ell_), ell_);
    t.resize(f_, 0);
    return t;
}

FFElem ResidueField::pow(FFElem a, u64 e) const {
    FFElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FFElem ResidueField::elem_at(u64 rank) const {
    // c_0 is the most significant digit so that rank order matches the
    // lexicographic order on (c_0, ..., c_{f-1}).
    FFElem e(f_, 0);
    for (unsigned i = f_; i-- > 0;) {
        e[i] = rank % ell_;
        rank /= ell_;
    }
    return e;
}

std::optional<FFElem> ResidueField::sqrt(const FFElem& a) const {
    for (u64 r = 0; r < q_; ++r) {
        FFElem e = elem_at(r);
        if (mul(e, e) == a) return e;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

ResidueExt::ResidueExt(ResidueFieldPtr base) : base_(std::move(base)) {
    const ResidueField& F = *base_;
    if (F.ell() == 2) throw internal_error("ResidueExt: ell = 2 unsupported");
    u64 exp = (F.q() - 1) / 2;
    bool found = false;
    // lexicographically smallest (b, a) with y^2 + a y + b irreducible,
    // i.e. disc = a^2 - 4b a non-square
    for (u64 rb = 0; rb < F.q() && !found; ++rb) {
        FFElem b = F.elem_at(rb);
        for (u64 ra = 0; ra < F.q() && !found; ++ra) {
            FFElem a = F.elem_at(ra);
            FFElem disc = F.sub(F.mul(a, a), F.mul(F.from_int(4), b));
            if (F.is_zero(disc)) continue;
            if (F.pow(disc, exp) != F.one()) {  // Euler: non-square
                a_ = a;
                b_ = b;
                found = true;
            }
        }
    }
    if (!found) throw internal_error("ResidueExt: no irreducible quadratic found");
}

ResidueExtPtr ResidueExt::create(ResidueFieldPtr base) {
    return ResidueExtPtr(new ResidueExt(std::move(base)));
}

ExtElem ResidueExt::add(const ExtElem& x, const ExtElem& y) const {
    return {base_->add(x.u, y.u), base_->add(x.v, y.v)};
}

ExtElem ResidueExt::sub(const ExtElem& x, const ExtElem& y) const {
    return {base_->sub(x.u, y.u), base_->sub(x.v, y.v)};
}

ExtElem ResidueExt::neg(const ExtElem& x) const { return {base_->neg(x.u), base_->neg(x.v)}; }

ExtElem ResidueExt::mul(const ExtElem& x, const ExtElem& y) const {
    // (u1 + v1 y)(u2 + v2 y) with y^2 = -a y - b
    const ResidueField& F = *base_;
    FFElem uu = F.mul(x.u, y.u);
    FFElem vv = F.mul(x.v, y.v);
    FFElem cross = F.add(F.mul(x.u, y.v), F.mul(x.v, y.u));
    return {F.sub(uu, F.mul(vv, b_)), F.sub(cross, F.mul(vv, a_))};
}

ExtElem ResidueExt::inv(const ExtElem& x) const {
    const ResidueField& F = *base_;
    // norm = u^2 - a u v + b v^2
    FFElem n = F.add(F.sub(F.mul(x.u, x.u), F.mul(a_, F.mul(x.u, x.v))), F.mul(b_, F.mul(x.v, x.v)));
    FFElem ninv = F.inv(n);
    // conjugate = (u - a v) - v y
    return {F.mul(F.sub(x.u, F.mul(a_, x.v)), ninv), F.neg(F.mul(x.v, ninv))};
}

ExtElem ResidueExt::sqrt_of_base(const FFElem& s) const {
    const ResidueField& F = *base_;
    if (auto r = F.sqrt(s)) {
        ExtElem e1 = embed(*r), e2 = neg(e1);
        return std::min(e1, e2);
    }
    // (u + v y)^2 = s with 2u = a v forces v^2 = 4 s / (a^2 - 4 b);
    // the ratio of two non-squares is a square, so v exists in the base.
    FFElem disc = F.sub(F.mul(a_, a_), F.mul(F.from_int(4), b_));
    FFElem v2 = F.mul(F.mul(F.from_int(4), s), F.inv(disc));
    auto v = F.sqrt(v2);
    if (!v) throw internal_error("sqrt_of_base: no root in extension");
    FFElem u = F.mul(*v, F.mul(a_, F.inv(F.from_int(2))));
    ExtElem e1{u, *v};
    ExtElem e2 = neg(e1);
    return std::min(e1, e2);
}

}  // namespace tridess
