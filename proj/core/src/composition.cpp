#include "toruslab/composition.hpp"

namespace toruslab {

namespace {

using Half = std::vector<Rational>;

Half lower(const Vec& x) { return Half(x.begin(), x.begin() + x.size() / 2); }
Half upper(const Vec& x) { return Half(x.begin() + x.size() / 2, x.end()); }

Vec join(const Half& a, const Half& b) {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Vec cd_conj(const Vec& x) {
    Vec out = x;
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
    return out;
}

// product in CD(Q; params[0..level)) on vectors of length 2^level
Vec cd_mul(const std::vector<Rational>& params, std::size_t level, const Vec& x, const Vec& y) {
    if (level == 0) return {x[0] * y[0]};
    const Rational& g = params[level - 1];
    Half x1 = lower(x), x2 = upper(x), y1 = lower(y), y2 = upper(y);
    // (x1,x2)(y1,y2) = (x1 y1 + g conj(y2) x2, y2 x1 + x2 conj(y1))
    Half a = cd_mul(params, level - 1, x1, y1);
    Half b = cd_mul(params, level - 1, cd_conj(y2), x2);
    Half c = cd_mul(params, level - 1, y2, x1);
    Half d = cd_mul(params, level - 1, x2, cd_conj(y1));
    Half first(a.size()), second(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        first[i] = a[i] + g * b[i];
        second[i] = c[i] + d[i];
    }
    return join(first, second);
}

}  // namespace

CompositionAlgebra::CompositionAlgebra(std::vector<Rational> params) : params_(std::move(params)) {
    if (params_.empty() || params_.size() > 3)
        throw NumberError("CompositionAlgebra: 1 to 3 parameters");
    for (const auto& p : params_)
        if (p == 0) throw NumberError("CompositionAlgebra: zero parameter");
    norm_diag_ = PfisterForm(params_).expansion().entries();
}

Vec CompositionAlgebra::one() const {
    Vec v = zero();
    v[0] = 1;
    return v;
}

Vec CompositionAlgebra::basis(std::size_t i) const {
    Vec v = zero();
    v[i] = 1;
    return v;
}

Vec CompositionAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw NumberError("CompositionAlgebra: dimension mismatch");
    return cd_mul(params_, params_.size(), x, y);
}

Vec CompositionAlgebra::conj(const Vec& x) const { return cd_conj(x); }

Vec CompositionAlgebra::add(const Vec& x, const Vec& y) const {
    Vec out = x;
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return out;
}

Vec CompositionAlgebra::sub(const Vec& x, const Vec& y) const {
    Vec out = x;
    for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
    return out;
}

Vec CompositionAlgebra::scale(const Rational& c, const Vec& x) const {
    Vec out = x;
    for (auto& v : out) v *= c;
    return out;
}

Rational CompositionAlgebra::norm(const Vec& x) const {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += norm_diag_[i] * x[i] * x[i];
    return s;
}

Rational CompositionAlgebra::norm_bilinear(const Vec& x, const Vec& y) const {
    return norm(add(x, y)) - norm(x) - norm(y);
}

std::optional<Vec> CompositionAlgebra::inverse(const Vec& x) const {
    Rational n = norm(x);
    if (n == 0) return std::nullopt;
    return scale(1 / n, conj(x));
}

PfisterForm CompositionAlgebra::norm_form() const { return PfisterForm(params_); }

bool CompositionAlgebra::is_split() const { return is_isotropic(norm_form().expansion()); }

bool is_division(const CompositionAlgebra& c) { return !is_isotropic(c.norm_form().expansion()); }

bool embeds_quadratic(const QuadraticEtale& k, const CompositionAlgebra& c) {
    if (k.split()) return c.is_split();
    return pfister_divides_1fold(k.alpha(), c.norm_form());
}

KElem hermitian_form(const CompositionAlgebra& c, const Vec& j, const Vec& x, const Vec& y) {
    Rational alpha = c.multiply(j, j)[0];
    // h(x,y) = N(x,y) + alpha^{-1} N(j x, y) j, valued in K = Q + Q j
    Rational a = c.norm_bilinear(x, y);
    Rational b = c.norm_bilinear(c.multiply(j, x), y) / alpha;
    return KElem{a, b};
}

HermitianData hermitian_structure(const CompositionAlgebra& c, const Vec& j) {
    if (c.dim() != 8) throw NumberError("hermitian_structure: need an octonion algebra");
    Vec j2 = c.multiply(j, j);
    for (std::size_t i = 1; i < 8; ++i)
        if (j2[i] != 0) throw NumberError("hermitian_structure: j^2 is not scalar");
    Rational alpha = j2[0];
    if (alpha == 0) throw NumberError("hermitian_structure: j is nilpotent");
    bool j_scalar = true;
    for (std::size_t i = 1; i < 8; ++i)
        if (j[i] != 0) j_scalar = false;
    if (j_scalar) throw NumberError("hermitian_structure: j lies in the scalar line");

    // K-perp with respect to the norm bilinear form; K = span(1, j)
    Mat rows = mat_zero(2, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        rows[0][i] = c.norm_bilinear(c.one(), c.basis(i));
        rows[1][i] = c.norm_bilinear(j, c.basis(i));
    }
    std::vector<Vec> perp = mat_kernel(rows);
    if (perp.size() != 6) throw NumberError("hermitian_structure: K-perp is degenerate");

    // greedy h-orthogonal K-basis of K-perp: pick anisotropic vectors and
    // pass to the h-orthogonal complement
    std::array<Vec, 3> basis;
    std::vector<Vec> pool = perp;
    for (int step = 0; step < 3; ++step) {
        // choose an anisotropic vector in the current pool (try pool
        // vectors, then sums of two)
        Vec chosen;
        bool found = false;
        for (std::size_t i = 0; i < pool.size() && !found; ++i) {
            if (c.norm(pool[i]) != 0) {
                chosen = pool[i];
                found = true;
            }
        }
        for (std::size_t i = 0; i < pool.size() && !found; ++i)
            for (std::size_t jdx = i + 1; jdx < pool.size() && !found; ++jdx) {
                Vec s = c.add(pool[i], pool[jdx]);
                if (c.norm(s) != 0) {
                    chosen = s;
                    found = true;
                }
            }
        if (!found) throw NumberError("hermitian_structure: no anisotropic vector found");
        basis[static_cast<std::size_t>(step)] = chosen;
        // h-orthogonal complement inside the pool span: x with
        // N(chosen, x) = 0 and N(j chosen, x) = 0
        Mat constraint = mat_zero(2, pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i) {
            constraint[0][i] = c.norm_bilinear(chosen, pool[i]);
            constraint[1][i] = c.norm_bilinear(c.multiply(j, chosen), pool[i]);
        }
        std::vector<Vec> coeffs = mat_kernel(constraint);
        std::vector<Vec> next;
        for (const auto& cf : coeffs) {
            Vec v = c.zero();
            for (std::size_t i = 0; i < pool.size(); ++i) v = c.add(v, c.scale(cf[i], pool[i]));
            next.push_back(v);
        }
        pool = next;
    }

    HermitianData out;
    out.alpha = alpha;
    out.basis = basis;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t jdx = 0; jdx < 3; ++jdx)
            out.gram[i][jdx] = hermitian_form(c, j, basis[i], basis[jdx]);
    // the basis is h-orthogonal by construction, so invertibility of the
    // gram reduces to its diagonal
    for (std::size_t i = 0; i < 3; ++i)
        if (out.gram[i][i].a == 0 && out.gram[i][i].b == 0)
            throw NumberError("hermitian_structure: degenerate gram");
    return out;
}

}  // namespace toruslab
