#include "tridess/qfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace tridess {

namespace {

constexpr double kPi = 3.14159265358979323846;

long gcd_long(long a, long b) { return std::gcd(a, b); }

// Reduce an integer polynomial modulo a monic integer polynomial, in place on
// a coefficient vector of arbitrary length; result truncated to deg(mod) coords.
std::vector<Int> reduce_mod(std::vector<Int> v, const IPoly& mod) {
    std::size_t deg = static_cast<std::size_t>(mod.degree());
    for (std::size_t i = v.size(); i-- > deg;) {
        Int c = v[i];
        if (c == 0) continue;
        v[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * mod.coeffs[j];
    }
    v.resize(deg, Int(0));
    return v;
}

std::vector<Rational> reduce_mod_q(std::vector<Rational> v, const IPoly& mod) {
    std::size_t deg = static_cast<std::size_t>(mod.degree());
    for (std::size_t i = v.size(); i-- > deg;) {
        Rational c = v[i];
        if (c == 0) continue;
        v[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * Rational(mod.coeffs[j]);
    }
    v.resize(deg, Rational(0));
    return v;
}

}  // namespace

IPoly cyclotomic(unsigned n) {
    static std::map<unsigned, IPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    IPoly f(std::move(xn));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = f.divmod_monic(cyclotomic(d));
        if (!r.is_zero()) throw internal_error("cyclotomic: non-exact division");
        f = std::move(q);
    }
    cache.emplace(n, f);
    return f;
}

IPoly dickson(unsigned k) {
    IPoly prev = IPoly::constant(Int(2));  // D_0
    if (k == 0) return prev;
    IPoly cur = IPoly::x();  // D_1
    for (unsigned i = 1; i < k; ++i) {
        IPoly next = IPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IPoly cos_minpoly(unsigned m) {
    if (m == 0) throw validation_error("cos_minpoly: m must be positive");
    if (m == 1) return IPoly({Int(2), Int(1)});  // 2cos(pi) = -2
    // Phi_{2m} is palindromic of even degree 2h; dividing by z^h and writing
    // z^k + z^{-k} = D_k(x) with x = z + 1/z gives the minimal polynomial.
    IPoly phi = cyclotomic(2 * m);
    long h = phi.degree() / 2;
    IPoly f = IPoly::constant(phi.coeff(h));
    for (long k = 1; k <= h; ++k) f = f + dickson(static_cast<unsigned>(k)) * phi.coeff(h + k);
    if (!f.is_monic()) throw internal_error("cos_minpoly: result not monic");
    return f;
}

AmbientField::AmbientField(unsigned m) : m_(m) {
    psi_minpoly_ = cos_minpoly(m);
    psi_numeric_ = 2.0 * std::cos(kPi / static_cast<double>(m));
    unsigned deg = static_cast<unsigned>(psi_minpoly_.degree());

    cos_table_.resize(m + 1);
    cos_table_[0] = std::vector<Int>(deg, Int(0));
    cos_table_[0][0] = 1;  // C_0 = 1
    if (m >= 1) {
        // E_t = D_t(psi) mod psi_minpoly, via the Dickson recurrence.
        std::vector<Int> e0(deg, Int(0));
        e0[0] = 2;
        std::vector<Int> e1(deg + 1, Int(0));
        e1[1] = 1;
        e1 = reduce_mod(std::move(e1), psi_minpoly_);
        if (m >= 1) cos_table_[1] = e1;
        std::vector<Int> prev = std::move(e0), cur = cos_table_[1];
        for (unsigned t = 2; t <= m; ++t) {
            std::vector<Int> next(deg + 1, Int(0));
            for (unsigned j = 0; j < deg; ++j) next[j + 1] = cur[j];
            next = reduce_mod(std::move(next), psi_minpoly_);
            for (unsigned j = 0; j < deg; ++j) next[j] -= prev[j];
            prev = std::move(cur);
            cur = std::move(next);
            cos_table_[t] = cur;
        }
    }
}

AmbientFieldPtr AmbientField::create(unsigned m) {
    return AmbientFieldPtr(new AmbientField(m));
}

unsigned AmbientField::reduce_index(long t) const {
    long period = 2 * static_cast<long>(m_);
    t %= period;
    if (t < 0) t += period;
    if (t > static_cast<long>(m_)) t = period - t;
    return static_cast<unsigned>(t);
}

AmbientElement AmbientElement::zero(AmbientFieldPtr f) {
    return AmbientElement{f, std::vector<Rational>(f->degree(), Rational(0))};
}

AmbientElement AmbientElement::constant(AmbientFieldPtr f, const Rational& c) {
    auto e = zero(f);
    e.coords[0] = c;
    return e;
}

AmbientElement AmbientElement::from_int_coords(AmbientFieldPtr f, const std::vector<Int>& v) {
    auto e = zero(f);
    for (std::size_t i = 0; i < v.size() && i < e.coords.size(); ++i) e.coords[i] = Rational(v[i]);
    return e;
}

AmbientElement AmbientElement::operator+(const AmbientElement& o) const {
    AmbientElement r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

AmbientElement AmbientElement::operator-(const AmbientElement& o) const {
    AmbientElement r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

AmbientElement AmbientElement::operator*(const AmbientElement& o) const {
    std::size_t n = coords.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += coords[i] * o.coords[j];
    }
    return AmbientElement{field, reduce_mod_q(std::move(prod), field->psi_minpoly())};
}

AmbientElement AmbientElement::operator*(const Rational& c) const {
    AmbientElement r = *this;
    for (auto& a : r.coords) a *= c;
    return r;
}

bool AmbientElement::is_rational() const {
    for (std::size_t i = 1; i < coords.size(); ++i)
        if (coords[i] != 0) return false;
    return true;
}

bool AmbientElement::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

AmbientElement AmbientElement::galois_image(long k) const {
    unsigned t = field->reduce_index(k);
    AmbientElement psi_img = t == 0 ? AmbientElement::constant(field, Rational(2))
                                    : AmbientElement::from_int_coords(field, field->basis_coords(t));
    AmbientElement acc = AmbientElement::zero(field);
    for (std::size_t i = coords.size(); i-- > 0;) {
        acc = acc * psi_img;
        acc.coords[0] += coords[i];
    }
    return acc;
}

double AmbientElement::eval_numeric() const {
    double acc = 0, psi = field->psi_numeric();
    for (std::size_t i = coords.size(); i-- > 0;)
        acc = acc * psi + static_cast<double>(coords[i]);
    return acc;
}

AmbientElement lambda_element(const AmbientFieldPtr& field, int s) {
    if (is_inf(s)) return AmbientElement::constant(field, Rational(2));
    if (s < 1 || field->m() % static_cast<unsigned>(s) != 0)
        throw validation_error("lambda_element: entry " + std::to_string(s) +
                               " does not divide m = " + std::to_string(field->m()));
    unsigned t = field->m() / static_cast<unsigned>(s);
    return AmbientElement::from_int_coords(field, field->basis_coords(t));
}

// ---------------------------------------------------------------------------
// Trace field construction.
//
// Everything happens in the "cosine basis" C_0 = 1, C_t = 2cos(t pi/m): integer
// vectors of length m+1 with the product rule C_a C_b = C_{a+b} + C_{a-b}
// (indices folded into [0, m], a folded index 0 counting as 2 C_0). The Galois
// action sigma_k just permutes indices, so conjugates and the minimal
// polynomial of gamma need no rational arithmetic at all.
// ---------------------------------------------------------------------------

namespace {

using CosVec = std::vector<Int>;  // length m+1

void add_folded(const AmbientField& F, CosVec& w, long t, const Int& val) {
    unsigned r = F.reduce_index(t);
    if (r == 0)
        w[0] += 2 * val;
    else
        w[r] += val;
}

CosVec cos_mul(const AmbientField& F, const CosVec& a, const CosVec& b) {
    CosVec w(a.size(), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            Int v = a[i] * b[j];
            if (i == 0)
                w[j] += v;
            else if (j == 0)
                w[i] += v;
            else {
                add_folded(F, w, static_cast<long>(i + j), v);
                add_folded(F, w, static_cast<long>(i) - static_cast<long>(j), v);
            }
        }
    }
    return w;
}

CosVec cos_conjugate(const AmbientField& F, const CosVec& v, long k) {
    CosVec w(v.size(), Int(0));
    w[0] = v[0];
    for (std::size_t t = 1; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        add_folded(F, w, k * static_cast<long>(t), v[t]);
    }
    return w;
}

std::vector<Int> cos_to_psi_coords(const AmbientField& F, const CosVec& v) {
    std::vector<Int> out(F.degree(), Int(0));
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        const auto& bc = F.basis_coords(static_cast<unsigned>(t));
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[t] * bc[j];
    }
    return out;
}

long canonical_residue(long k, long period) {
    k %= period;
    if (k < 0) k += period;
    return std::min(k, period - k);
}

}  // namespace

TraceFieldPtr TraceField::create(const Signature& sig) {
    validate_signature(sig.p, sig.q, sig.r);
    auto tf = std::shared_ptr<TraceField>(new TraceField());
    tf->sig_ = sig;

    long m = 1;
    for (int s : sig.entries())
        if (!is_inf(s)) m = std::lcm(m, static_cast<long>(s));
    tf->ambient_ = AmbientField::create(static_cast<unsigned>(m));
    const AmbientField& F = *tf->ambient_;
    long period = 2 * m;

    // (Z/2m)^x / {+-1}, canonical representatives in [1, m].
    std::vector<long> units;
    for (long k = 1; k <= m; ++k)
        if (gcd_long(k, period) == 1) units.push_back(k);

    std::vector<long> tvals;  // cosine indices of the finite-entry traces
    for (int s : sig.entries())
        if (!is_inf(s)) tvals.push_back(m / s);

    // H = residues fixing every lambda: k * t = +- t mod 2m.
    std::vector<long> H;
    for (long k : units) {
        bool fixes_all = true;
        for (long t : tvals) {
            long kt = (k * t) % period;
            if (kt != t % period && kt != (period - t) % period) {
                fixes_all = false;
                break;
            }
        }
        if (fixes_all) H.push_back(k);
    }
    tf->fixing_group_ = H;
    unsigned d = static_cast<unsigned>(units.size() / H.size());
    tf->d_ = d;

    // Coset representatives: the minimal canonical residue in each H-coset.
    auto coset_rep = [&](long k) {
        long best = -1;
        for (long h : H) {
            long c = canonical_residue(h * k, period);
            if (best < 0 || c < best) best = c;
        }
        return best;
    };
    std::set<long> reps;
    for (long u : units) reps.insert(coset_rep(u));
    tf->galois_reps_.assign(reps.begin(), reps.end());
    if (tf->galois_reps_.size() != d || tf->galois_reps_.front() != 1)
        throw internal_error("trace_field: coset decomposition inconsistent");

    if (d == 1) {
        tf->gamma_ = AmbientElement::zero(tf->ambient_);
        tf->k_minpoly_ = IPoly::x();
        return tf;
    }

    // Deterministic primitive-element candidates: weight triples applied to
    // (lambda_p, lambda_q, lambda_r).
    std::vector<std::array<long, 3>> weights = {
        {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 1}, {0, 1, 2}};
    for (long w = 2; weights.size() < 64; ++w) weights.push_back({1, w, w * w});

    const auto entries = sig.entries();
    for (const auto& wt : weights) {
        CosVec v(static_cast<std::size_t>(m) + 1, Int(0));
        for (int i = 0; i < 3; ++i) {
            if (wt[i] == 0) continue;
            if (is_inf(entries[i]))
                v[0] += 2 * wt[i];
            else
                v[static_cast<std::size_t>(m / entries[i])] += wt[i];
        }
        // Conjugates under the chosen coset representatives.
        std::vector<CosVec> conj;
        conj.reserve(d);
        for (long k : tf->galois_reps_) conj.push_back(cos_conjugate(F, v, k));
        std::set<std::vector<Int>> distinct;
        for (const auto& c : conj) distinct.insert(cos_to_psi_coords(F, c));
        if (distinct.size() != d) continue;

        // k_minpoly = prod (x - conjugate), computed in the cosine basis.
        std::vector<CosVec> poly;  // coefficients, ascending
        CosVec one(v.size(), Int(0));
        one[0] = 1;
        poly.push_back(one);
        for (const auto& c : conj) {
            std::vector<CosVec> next(poly.size() + 1, CosVec(v.size(), Int(0)));
            for (std::size_t i = 0; i < poly.size(); ++i) next[i + 1] = poly[i];
            for (std::size_t i = 0; i < poly.size(); ++i) {
                CosVec t = cos_mul(F, poly[i], c);
                for (std::size_t j = 0; j < t.size(); ++j) next[i][j] -= t[j];
            }
            poly = std::move(next);
        }
        std::vector<Int> coeffs(poly.size());
        bool rational = true;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            auto pc = cos_to_psi_coords(F, poly[i]);
            for (std::size_t j = 1; j < pc.size(); ++j)
                if (pc[j] != 0) rational = false;
            coeffs[i] = pc[0];
        }
        if (!rational)
            throw internal_error("trace_field: minimal polynomial has irrational coefficient");
        tf->k_minpoly_ = IPoly(std::move(coeffs));
        if (!tf->k_minpoly_.is_monic() || tf->k_minpoly_.degree() != static_cast<long>(d))
            throw internal_error("trace_field: bad minimal polynomial shape");
        tf->gamma_ = AmbientElement::from_int_coords(tf->ambient_, cos_to_psi_coords(F, v));

        // Advisory numeric cross-check only; all of the above is exact.
        double g = tf->gamma_.eval_numeric();
        if (std::abs(tf->k_minpoly_.eval_double(g)) > 1e-6 * std::max(1.0, std::pow(std::abs(g), d)))
            throw internal_error("trace_field: numeric cross-check failed");
        return tf;
    }
    throw internal_error("trace_field: no primitive element found in 64 candidates");
}

TraceFieldPtr trace_field(const Signature& sig) { return TraceField::create(sig); }

bool TraceField::fixes(long k, const AmbientElement& x) const {
    return x.galois_image(k) == x;
}

bool TraceField::is_h_fixed(const AmbientElement& x) const {
    for (long h : fixing_group_) {
        if (h == 1) continue;
        if (!fixes(h, x)) return false;
    }
    return true;
}

KElement TraceField::element(std::vector<Rational> coords) const {
    if (coords.size() != d_) throw internal_error("KElement: wrong coordinate length");
    return KElement{shared_from_this(), std::move(coords)};
}

KElement TraceField::zero_element() const {
    return element(std::vector<Rational>(d_, Rational(0)));
}

KElement TraceField::gamma_element() const {
    std::vector<Rational> c(d_, Rational(0));
    if (d_ >= 2)
        c[1] = 1;
    // for d = 1, gamma = 0
    return element(std::move(c));
}

KElement TraceField::lambda_k(int s) const {
    return to_k_coordinates(lambda_element(ambient_, s), shared_from_this());
}

KElement KElement::operator+(const KElement& o) const {
    KElement r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

KElement KElement::operator*(const KElement& o) const {
    std::size_t n = coords.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += coords[i] * o.coords[j];
    return KElement{field, reduce_mod_q(std::move(prod), field->k_minpoly())};
}

AmbientElement KElement::to_ambient() const {
    AmbientElement acc = AmbientElement::zero(field->ambient());
    const AmbientElement& g = field->gamma();
    for (std::size_t i = coords.size(); i-- > 0;) {
        acc = acc * g;
        acc.coords[0] += coords[i];
    }
    return acc;
}

std::vector<Automorphism> galois_group(const TraceFieldPtr& field) {
    std::vector<Automorphism> out;
    for (long k : field->galois_reps()) {
        AmbientElement img = field->gamma().galois_image(k);
        out.push_back(Automorphism{k, to_k_coordinates(img, field)});
    }
    return out;
}

long compose_residues(const TraceFieldPtr& field, long k1, long k2) {
    long period = 2 * static_cast<long>(field->ambient()->m());
    long k = (k1 * k2) % period;
    // map to the coset's canonical representative
    long best = -1;
    for (long h : field->fixing_group()) {
        long c = std::min((h * k) % period, period - (h * k) % period);
        if (best < 0 || c < best) best = c;
    }
    return best;
}

KElement to_k_coordinates(const AmbientElement& x, const TraceFieldPtr& field) {
    if (x.field->m() != field->ambient()->m())
        throw internal_error("to_k_coordinates: ambient mismatch");
    if (!field->is_h_fixed(x))
        throw not_in_subfield_error("element is not fixed by the subfield's fixing group");
    unsigned d = field->degree();
    unsigned n = field->ambient()->degree();

    // Columns: psi-coordinates of gamma^j, j = 0..d-1.
    std::vector<AmbientElement> pows;
    pows.push_back(AmbientElement::constant(field->ambient(), Rational(1)));
    for (unsigned j = 1; j < d; ++j) pows.push_back(pows.back() * field->gamma());

    // Exact Gaussian elimination on the n x (d+1) augmented system.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(d + 1, Rational(0)));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < d; ++j) a[i][j] = pows[j].coords[i];
        a[i][d] = x.coords[i];
    }
    std::vector<int> pivot_col(n, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < d && row < n; ++col) {
        unsigned sel = row;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[sel], a[row]);
        Rational inv = a[row][col];
        for (unsigned j = col; j <= d; ++j) a[row][j] /= inv;
        for (unsigned i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (unsigned j = col; j <= d; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    if (row != d) throw internal_error("to_k_coordinates: singular system");
    for (unsigned i = row; i < n; ++i)
        if (a[i][d] != 0) throw internal_error("to_k_coordinates: inconsistent system");
    std::vector<Rational> coords(d, Rational(0));
    for (unsigned i = 0; i < row; ++i) coords[static_cast<unsigned>(pivot_col[i])] = a[i][d];
    return field->element(std::move(coords));
}

}  // namespace tridess
