#include "toruslab/etale.hpp"

#include <algorithm>

namespace toruslab {

EtaleAlgebra::EtaleAlgebra(std::string name, std::vector<std::vector<Vec>> table, Vec unit)
    : name_(std::move(name)), table_(std::move(table)), unit_(std::move(unit)) {
    std::size_t n = unit_.size();
    if (table_.size() != n) throw NumberError("EtaleAlgebra: bad table");
    for (const auto& row : table_) {
        if (row.size() != n) throw NumberError("EtaleAlgebra: bad table row");
        for (const auto& v : row)
            if (v.size() != n) throw NumberError("EtaleAlgebra: bad table entry");
    }
}

Vec EtaleAlgebra::mul(const Vec& x, const Vec& y) const {
    std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw NumberError("EtaleAlgebra::mul: dimension mismatch");
    Vec out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            Rational c = x[i] * y[j];
            const Vec& t = table_[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (t[k] != 0) out[k] += c * t[k];
        }
    }
    return out;
}

Vec EtaleAlgebra::add(const Vec& x, const Vec& y) const {
    Vec out = x;
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return out;
}

Vec EtaleAlgebra::sub(const Vec& x, const Vec& y) const {
    Vec out = x;
    for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
    return out;
}

Vec EtaleAlgebra::scale(const Rational& c, const Vec& x) const {
    Vec out = x;
    for (auto& v : out) v *= c;
    return out;
}

Vec EtaleAlgebra::power(const Vec& x, long e) const {
    Vec acc = unit_;
    Vec base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::optional<Vec> EtaleAlgebra::inverse(const Vec& x) const {
    auto sol = mat_solve(mult_matrix(x), unit_);
    return sol;
}

Mat EtaleAlgebra::mult_matrix(const Vec& x) const {
    std::size_t n = dim();
    Mat m = mat_zero(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n, Rational(0));
        ej[j] = 1;
        Vec col = mul(x, ej);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

Rational EtaleAlgebra::norm(const Vec& x) const { return mat_det(mult_matrix(x)); }

Rational EtaleAlgebra::trace(const Vec& x) const { return mat_trace(mult_matrix(x)); }

Poly EtaleAlgebra::min_poly(const Vec& x) const {
    std::size_t n = dim();
    std::vector<Vec> powers{unit_};
    Vec cur = unit_;
    for (std::size_t k = 1; k <= n; ++k) {
        cur = mul(cur, x);
        // is cur a combination of the previous powers?
        Mat a = mat_zero(n, powers.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < powers.size(); ++j) a[i][j] = powers[j][i];
        if (auto sol = mat_solve(a, cur)) {
            std::vector<Rational> coeffs(k + 1, Rational(0));
            for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*sol)[j];
            coeffs[k] = 1;
            return Poly(std::move(coeffs));
        }
        powers.push_back(cur);
    }
    throw NumberError("min_poly: no relation found (algebra not unital-associative?)");
}

Mat EtaleAlgebra::trace_gram() const {
    std::size_t n = dim();
    Mat g = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ei(n, Rational(0)), ej(n, Rational(0));
            ei[i] = 1;
            ej[j] = 1;
            g[i][j] = trace(mul(ei, ej));
        }
    return g;
}

namespace {

Vec eval_poly_at(const EtaleAlgebra& a, const Poly& p, const Vec& x) {
    Vec acc = a.zero();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = a.mul(acc, x);
        acc = a.add(acc, a.scale(*it, a.unit()));
    }
    return acc;
}

}  // namespace

std::vector<Vec> EtaleAlgebra::idempotents() const {
    std::size_t n = dim();
    // deterministic sequence of candidate primitive elements
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(n, Rational(0));
        v[i] = 1;
        candidates.push_back(v);
    }
    const long weight_sets[][6] = {{0, 1, 2, 3, 4, 5},   {1, 1, 2, 3, 5, 8},
                                   {0, 1, -1, 2, -2, 3}, {1, 2, 4, 8, 16, 32},
                                   {0, 1, 3, 9, 27, 81}, {2, -1, 5, 1, -3, 7}};
    for (const auto& w : weight_sets) {
        Vec v(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) v[i] = Rational(w[i % 6]);
        candidates.push_back(v);
    }
    for (const auto& c : candidates) {
        Poly p = min_poly(c);
        if (static_cast<std::size_t>(p.degree()) != n) continue;
        auto factors = factor_rational(p);
        for (const auto& f : factors)
            if (f.multiplicity > 1) throw NumberError("idempotents: algebra is not etale");
        std::vector<Vec> out;
        for (const auto& f : factors) {
            Poly cofactor = p.divmod(f.factor).first;
            auto [g, u, v] = poly_ext_gcd(f.factor, cofactor);
            if (g.degree() != 0) throw NumberError("idempotents: inseparable block");
            // v * cofactor = 1 mod factor and = 0 mod cofactor
            Vec e = eval_poly_at(*this, v * cofactor, c);
            if (!(mul(e, e) == e)) throw NumberError("idempotents: solver produced a non-idempotent");
            out.push_back(e);
        }
        // verify completeness and orthogonality
        Vec sum = zero();
        for (const auto& e : out) sum = add(sum, e);
        if (!(sum == unit_)) throw NumberError("idempotents: incomplete system");
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                Vec prod = mul(out[i], out[j]);
                for (const auto& t : prod)
                    if (t != 0) throw NumberError("idempotents: non-orthogonal system");
            }
        std::sort(out.begin(), out.end());
        return out;
    }
    throw NumberError("idempotents: no primitive element found");
}

std::size_t EtaleAlgebra::block_rank(const Vec& idempotent) const {
    Mat m = mult_matrix(idempotent);
    // rank = dim - dim ker
    return dim() - mat_kernel(m).size();
}

EtaleAlgebra tensor_product(const EtaleAlgebra& a, const EtaleAlgebra& b) {
    std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    auto idx = [&](std::size_t i, std::size_t j) { return i * nb + j; };
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n, Rational(0))));
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < nb; ++j1)
            for (std::size_t i2 = 0; i2 < na; ++i2)
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    Vec ea(na, Rational(0)), eb(na, Rational(0));
                    ea[i1] = 1;
                    eb[i2] = 1;
                    Vec pa = a.mul(ea, eb);
                    Vec fa(nb, Rational(0)), fb(nb, Rational(0));
                    fa[j1] = 1;
                    fb[j2] = 1;
                    Vec pb = b.mul(fa, fb);
                    Vec& out = table[idx(i1, j1)][idx(i2, j2)];
                    for (std::size_t i = 0; i < na; ++i)
                        for (std::size_t j = 0; j < nb; ++j) out[idx(i, j)] = pa[i] * pb[j];
                }
    Vec unit(n, Rational(0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) unit[idx(i, j)] = a.unit()[i] * b.unit()[j];
    return EtaleAlgebra(a.name() + "(x)" + b.name(), std::move(table), std::move(unit));
}

// ---- QuadraticEtale ---------------------------------------------------------

namespace {

EtaleAlgebra quadratic_algebra(const Rational& alpha) {
    // basis {1, w}, w^2 = alpha
    std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2, Vec(2, Rational(0))));
    t[0][0] = {Rational(1), Rational(0)};
    t[0][1] = {Rational(0), Rational(1)};
    t[1][0] = {Rational(0), Rational(1)};
    t[1][1] = {alpha, Rational(0)};
    return EtaleAlgebra("K", std::move(t), {Rational(1), Rational(0)});
}

}  // namespace

QuadraticEtale::QuadraticEtale(const Rational& alpha)
    : alpha_(squarefree_part(alpha)), alg_(quadratic_algebra(Rational(alpha_.representative()))) {}

KElem QuadraticEtale::mul(const KElem& x, const KElem& y) const {
    return {x.a * y.a + alpha() * x.b * y.b, x.a * y.b + x.b * y.a};
}

std::optional<KElem> QuadraticEtale::inverse(const KElem& x) const {
    Rational n = norm(x);
    if (n == 0) return std::nullopt;
    return KElem{x.a / n, -x.b / n};
}

KElem QuadraticEtale::norm_one_from(const KElem& z) const {
    auto inv = inverse(z);
    if (!inv) throw NumberError("norm_one_from: z is not a unit");
    return mul(conj(z), *inv);
}

// ---- CubicEtale -------------------------------------------------------------

CubicEtale CubicEtale::split_triple() {
    std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, Vec(3, Rational(0))));
    for (int i = 0; i < 3; ++i) t[i][i][i] = 1;
    EtaleAlgebra alg("QxQxQ", std::move(t), {Rational(1), Rational(1), Rational(1)});
    return CubicEtale(CubicKind::SplitTriple, std::move(alg), Poly(), Rational(0));
}

CubicEtale CubicEtale::mixed(const Rational& alpha0) {
    SquareClass cls = squarefree_part(alpha0);
    if (cls.is_trivial())
        throw NumberError("CubicEtale::mixed: alpha0 is a square; use split_triple");
    Rational a0(cls.representative());
    // basis u0=(1,0), u1=(0,1), u2=(0,w0)
    std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, Vec(3, Rational(0))));
    t[0][0] = {Rational(1), Rational(0), Rational(0)};
    t[1][1] = {Rational(0), Rational(1), Rational(0)};
    t[1][2] = t[2][1] = {Rational(0), Rational(0), Rational(1)};
    t[2][2] = {Rational(0), a0, Rational(0)};
    EtaleAlgebra alg("QxK0", std::move(t), {Rational(1), Rational(1), Rational(0)});
    return CubicEtale(CubicKind::MixedPair, std::move(alg), Poly(), a0);
}

CubicEtale CubicEtale::field(const Poly& min_poly) {
    if (min_poly.degree() != 3 || min_poly.leading() != 1)
        throw NumberError("CubicEtale::field: need a monic cubic");
    for (const auto& c : min_poly.coeffs())
        if (denominator(c) != 1) throw NumberError("CubicEtale::field: need integral coefficients");
    if (!poly_is_irreducible(min_poly))
        throw NumberError("CubicEtale::field: polynomial is reducible over Q");
    // basis {1, x, x^2}; x^3 = -c0 - c1 x - c2 x^2
    Rational c0 = min_poly.coeff(0), c1 = min_poly.coeff(1), c2 = min_poly.coeff(2);
    Vec x3{-c0, -c1, -c2};
    Vec x4{c0 * c2, c1 * c2 - c0, c2 * c2 - c1};
    std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, Vec(3, Rational(0))));
    auto basis_vec = [](int k) {
        Vec v(3, Rational(0));
        v[static_cast<std::size_t>(k)] = 1;
        return v;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int d = i + j;
            if (d <= 2) t[i][j] = basis_vec(d);
            else if (d == 3) t[i][j] = x3;
            else t[i][j] = x4;
        }
    EtaleAlgebra alg("Q[x]/(f)", std::move(t), {Rational(1), Rational(0), Rational(0)});
    return CubicEtale(CubicKind::Field, std::move(alg), min_poly, Rational(0));
}

SquareClass CubicEtale::discriminant() const { return squarefree_part(mat_det(alg_.trace_gram())); }

std::string CubicEtale::kind_str() const {
    switch (kind_) {
        case CubicKind::SplitTriple: return "split";
        case CubicKind::MixedPair: return "mixed";
        case CubicKind::Field: return "field";
    }
    return "?";
}

std::vector<Vec> roots_in_field(const CubicEtale& l) {
    if (l.kind() != CubicKind::Field) throw NumberError("roots_in_field: not a field");
    const EtaleAlgebra& a = l.algebra();
    EtaleAlgebra t = tensor_product(a, a);
    // y = 1 (x) x sits at index 0*3+1
    Vec y(t.dim(), Rational(0));
    y[1] = 1;
    std::vector<Vec> roots;
    for (const auto& e : t.idempotents()) {
        if (t.block_rank(e) != 3) continue;
        // solve (r (x) 1) e = y e over the 3 coordinates of r
        Vec target = t.mul(y, e);
        Mat m = mat_zero(t.dim(), 3);
        for (std::size_t k = 0; k < 3; ++k) {
            Vec rk(t.dim(), Rational(0));
            rk[k * 3] = 1;  // b_k (x) 1
            Vec col = t.mul(rk, e);
            for (std::size_t i = 0; i < t.dim(); ++i) m[i][k] = col[i];
        }
        auto sol = mat_solve(m, target);
        if (!sol) throw NumberError("roots_in_field: projection failed");
        Vec r = *sol;
        Vec value = eval_poly_at(a, l.min_poly(), r);
        for (const auto& c : value)
            if (c != 0) throw NumberError("roots_in_field: candidate is not a root");
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Mat> CubicEtale::automorphisms() const {
    std::vector<Mat> out;
    switch (kind_) {
        case CubicKind::SplitTriple: {
            int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (auto& p : perms) {
                Mat m = mat_zero(3, 3);
                for (int i = 0; i < 3; ++i) m[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(i)] = 1;
                out.push_back(m);
            }
            break;
        }
        case CubicKind::MixedPair: {
            out.push_back(mat_identity(3));
            Mat conj = mat_identity(3);
            conj[2][2] = -1;  // w0 -> -w0
            out.push_back(conj);
            break;
        }
        case CubicKind::Field: {
            for (const auto& r : roots_in_field(*this)) {
                // automorphism sends x to the root r; columns are 1, r, r^2
                Mat m = mat_zero(3, 3);
                Vec r2 = alg_.mul(r, r);
                m[0][0] = 1;
                for (std::size_t i = 0; i < 3; ++i) {
                    m[i][1] = r[i];
                    m[i][2] = r2[i];
                }
                out.push_back(m);
            }
            break;
        }
    }
    return out;
}

// ---- UnitaryAlgebra ---------------------------------------------------------

UnitaryAlgebra::UnitaryAlgebra(CubicEtale l, QuadraticEtale k)
    : l_(std::move(l)), k_(std::move(k)), e_(tensor_product(l_.algebra(), k_.algebra())) {}

Vec UnitaryAlgebra::tau(const Vec& x) const {
    Vec out = x;
    for (std::size_t i = 0; i < 3; ++i) out[2 * i + 1] = -out[2 * i + 1];
    return out;
}

Vec UnitaryAlgebra::embed_L(const Vec& l) const {
    Vec out = e_.zero();
    for (std::size_t i = 0; i < 3; ++i) out[2 * i] = l[i];
    return out;
}

Vec UnitaryAlgebra::embed_K(const KElem& k) const {
    // 1_L (x) (a + b w)
    Vec out = e_.zero();
    const Vec& unit_l = l_.algebra().unit();
    for (std::size_t i = 0; i < 3; ++i) {
        out[2 * i] = unit_l[i] * k.a;
        out[2 * i + 1] = unit_l[i] * k.b;
    }
    return out;
}

std::array<KElem, 3> UnitaryAlgebra::k_components(const Vec& x) const {
    return {KElem{x[0], x[1]}, KElem{x[2], x[3]}, KElem{x[4], x[5]}};
}

Vec UnitaryAlgebra::from_k_components(const std::array<KElem, 3>& c) const {
    return {c[0].a, c[0].b, c[1].a, c[1].b, c[2].a, c[2].b};
}

KElem UnitaryAlgebra::norm_E_over_K(const Vec& x) const {
    // 3x3 determinant over K of multiplication by x on the basis b_i (x) 1
    auto xc = k_components(x);
    // column j: x * (b_j (x) 1) has K-components sum_i xc[i] * c^L_{ij}
    KElem m[3][3];
    const EtaleAlgebra& la = l_.algebra();
    for (std::size_t j = 0; j < 3; ++j) {
        Vec ej(3, Rational(0));
        ej[j] = 1;
        KElem col[3] = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
        for (std::size_t i = 0; i < 3; ++i) {
            Vec ei(3, Rational(0));
            ei[i] = 1;
            Vec prod = la.mul(ei, ej);
            for (std::size_t kk = 0; kk < 3; ++kk) {
                if (prod[kk] == 0) continue;
                KElem term{xc[i].a * prod[kk], xc[i].b * prod[kk]};
                col[kk] = k_.add(col[kk], term);
            }
        }
        for (std::size_t i = 0; i < 3; ++i) m[i][j] = col[i];
    }
    auto mul2 = [&](const KElem& p, const KElem& q) { return k_.mul(p, q); };
    auto sub2 = [&](const KElem& p, const KElem& q) { return k_.sub(p, q); };
    KElem c00 = sub2(mul2(m[1][1], m[2][2]), mul2(m[1][2], m[2][1]));
    KElem c01 = sub2(mul2(m[1][0], m[2][2]), mul2(m[1][2], m[2][0]));
    KElem c02 = sub2(mul2(m[1][0], m[2][1]), mul2(m[1][1], m[2][0]));
    KElem det = sub2(mul2(m[0][0], c00), mul2(m[0][1], c01));
    det = k_.add(det, mul2(m[0][2], c02));
    return det;
}

Vec UnitaryAlgebra::norm_E_over_L(const Vec& x) const {
    Vec prod = e_.mul(x, tau(x));
    auto [l_part, w_part] = parts(prod);
    for (const auto& c : w_part)
        if (c != 0) throw NumberError("norm_E_over_L: product not tau-fixed");
    return l_part;
}

std::pair<Vec, Vec> UnitaryAlgebra::parts(const Vec& x) const {
    Vec l_part(3), w_part(3);
    for (std::size_t i = 0; i < 3; ++i) {
        l_part[i] = x[2 * i];
        w_part[i] = x[2 * i + 1];
    }
    return {l_part, w_part};
}

bool UnitaryAlgebra::is_L_element(const Vec& x) const {
    for (std::size_t i = 0; i < 3; ++i)
        if (x[2 * i + 1] != 0) return false;
    return true;
}

Vec UnitaryAlgebra::apply_L_automorphism(const Mat& phi, const Vec& x) const {
    auto [l_part, w_part] = parts(x);
    Vec l2 = mat_apply(phi, l_part), w2 = mat_apply(phi, w_part);
    Vec out(6);
    for (std::size_t i = 0; i < 3; ++i) {
        out[2 * i] = l2[i];
        out[2 * i + 1] = w2[i];
    }
    return out;
}

Vec UnitaryAlgebra::from_switch_pair(const Vec& u, const Vec& v) const {
    if (!k_.split()) throw NumberError("from_switch_pair: K is not split");
    Vec x(6);
    for (std::size_t i = 0; i < 3; ++i) {
        x[2 * i] = (u[i] + v[i]) / 2;
        x[2 * i + 1] = (u[i] - v[i]) / 2;
    }
    return x;
}

std::pair<Vec, Vec> UnitaryAlgebra::to_switch_pair(const Vec& x) const {
    if (!k_.split()) throw NumberError("to_switch_pair: K is not split");
    Vec u(3), v(3);
    for (std::size_t i = 0; i < 3; ++i) {
        u[i] = x[2 * i] + x[2 * i + 1];
        v[i] = x[2 * i] - x[2 * i + 1];
    }
    return {u, v};
}

IdempotentReport decompose_report(const EtaleAlgebra& a) {
    IdempotentReport rep;
    auto es = a.idempotents();
    rep.count = es.size();
    for (const auto& e : es) rep.block_ranks.push_back(a.block_rank(e));
    rep.complete = true;  // idempotents() verifies completeness internally
    return rep;
}

}  // namespace toruslab
