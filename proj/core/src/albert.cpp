#include "toruslab/albert.hpp"

namespace toruslab {

namespace {

using OctMat = std::array<std::array<Vec, 3>, 3>;

}  // namespace

ReducedAlbert::ReducedAlbert(CompositionAlgebra c, std::array<Rational, 3> gamma)
    : c_(std::move(c)), gamma_(std::move(gamma)) {
    if (c_.dim() != 8) throw NumberError("ReducedAlbert: coefficient algebra must be octonion");
    for (const auto& g : gamma_)
        if (g == 0) throw NumberError("ReducedAlbert: zero gamma entry");
}

AlbertElement ReducedAlbert::zero() const {
    return AlbertElement{{Rational(0), Rational(0), Rational(0)},
                         {c_.zero(), c_.zero(), c_.zero()}};
}

AlbertElement ReducedAlbert::identity() const {
    return diagonal(Rational(1), Rational(1), Rational(1));
}

AlbertElement ReducedAlbert::diagonal(const Rational& a, const Rational& b,
                                      const Rational& d) const {
    return AlbertElement{{a, b, d}, {c_.zero(), c_.zero(), c_.zero()}};
}

AlbertElement ReducedAlbert::element(const std::array<Rational, 3>& xi,
                                     const std::array<Vec, 3>& c) const {
    for (const auto& v : c)
        if (v.size() != 8) throw NumberError("AlbertElement: octonion parts must have 8 coords");
    return AlbertElement{xi, c};
}

AlbertElement ReducedAlbert::add(const AlbertElement& x, const AlbertElement& y) const {
    AlbertElement out = x;
    for (int i = 0; i < 3; ++i) {
        out.xi[static_cast<std::size_t>(i)] += y.xi[static_cast<std::size_t>(i)];
        out.c[static_cast<std::size_t>(i)] =
            c_.add(out.c[static_cast<std::size_t>(i)], y.c[static_cast<std::size_t>(i)]);
    }
    return out;
}

AlbertElement ReducedAlbert::scale(const Rational& s, const AlbertElement& x) const {
    AlbertElement out = x;
    for (std::size_t i = 0; i < 3; ++i) {
        out.xi[i] *= s;
        out.c[i] = c_.scale(s, out.c[i]);
    }
    return out;
}

bool ReducedAlbert::equal(const AlbertElement& x, const AlbertElement& y) const {
    return x.xi == y.xi && x.c == y.c;
}

AlbertElement ReducedAlbert::product(const AlbertElement& x, const AlbertElement& y) const {
    const Rational &g1 = gamma_[0], &g2 = gamma_[1], &g3 = gamma_[2];
    auto to_matrix = [&](const AlbertElement& v) {
        OctMat m;
        m[0][0] = c_.scale(v.xi[0], c_.one());
        m[1][1] = c_.scale(v.xi[1], c_.one());
        m[2][2] = c_.scale(v.xi[2], c_.one());
        m[1][2] = v.c[0];
        m[2][1] = c_.scale(g2 / g3, c_.conj(v.c[0]));
        m[2][0] = v.c[1];
        m[0][2] = c_.scale(g3 / g1, c_.conj(v.c[1]));
        m[0][1] = v.c[2];
        m[1][0] = c_.scale(g1 / g2, c_.conj(v.c[2]));
        return m;
    };
    OctMat mx = to_matrix(x), my = to_matrix(y);
    OctMat prod;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Vec acc = c_.zero();
            for (int k = 0; k < 3; ++k) {
                acc = c_.add(acc, c_.multiply(mx[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                              my[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
                acc = c_.add(acc, c_.multiply(my[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                              mx[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
            }
            prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c_.scale(Rational(1, 2), acc);
        }
    // re-extract (xi; c) and verify the Gamma-hermitian constraint exactly
    AlbertElement out;
    for (std::size_t i = 0; i < 3; ++i) {
        const Vec& d = prod[i][i];
        for (std::size_t k = 1; k < 8; ++k)
            if (d[k] != 0) throw NumberError("albert product: diagonal left the scalar line");
        out.xi[i] = d[0];
    }
    out.c[0] = prod[1][2];
    out.c[1] = prod[2][0];
    out.c[2] = prod[0][1];
    if (!(prod[2][1] == c_.scale(g2 / g3, c_.conj(out.c[0]))) ||
        !(prod[0][2] == c_.scale(g3 / g1, c_.conj(out.c[1]))) ||
        !(prod[1][0] == c_.scale(g1 / g2, c_.conj(out.c[2]))))
        throw NumberError("albert product: result is not Gamma-hermitian");
    return out;
}

Rational ReducedAlbert::trace(const AlbertElement& x) const { return x.xi[0] + x.xi[1] + x.xi[2]; }

std::array<Rational, 3> ReducedAlbert::trace_quadratic_norm(const AlbertElement& x) const {
    AlbertElement x2 = product(x, x);
    AlbertElement x3 = product(x, x2);
    Rational p1 = trace(x), p2 = trace(x2), p3 = trace(x3);
    Rational t = p1;
    Rational s = (p1 * p1 - p2) / 2;
    Rational n = (p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3) / 6;
    return {t, s, n};
}

AlbertElement ReducedAlbert::degree3_identity_defect(const AlbertElement& x) const {
    AlbertElement x2 = product(x, x);
    AlbertElement x3 = product(x, x2);
    auto [t, s, n] = trace_quadratic_norm(x);
    AlbertElement acc = x3;
    acc = add(acc, scale(-t, x2));
    acc = add(acc, scale(s, x));
    acc = add(acc, scale(-n, identity()));
    return acc;
}

Vec ReducedAlbert::flatten(const AlbertElement& x) const {
    Vec out;
    out.reserve(27);
    for (const auto& v : x.xi) out.push_back(v);
    for (const auto& oc : x.c) out.insert(out.end(), oc.begin(), oc.end());
    return out;
}

AlbertElement ReducedAlbert::unflatten(const Vec& v) const {
    if (v.size() != 27) throw NumberError("AlbertElement: need 27 coordinates");
    AlbertElement out;
    for (std::size_t i = 0; i < 3; ++i) out.xi[i] = v[i];
    for (std::size_t i = 0; i < 3; ++i)
        out.c[i] = Vec(v.begin() + 3 + static_cast<long>(8 * i),
                       v.begin() + 3 + static_cast<long>(8 * (i + 1)));
    return out;
}

Rational first_tits_norm(const Rational& mu, const Mat& x, const Mat& y, const Mat& z) {
    if (mu == 0) throw NumberError("first_tits_norm: mu must be nonzero");
    if (x.size() != 3 || y.size() != 3 || z.size() != 3)
        throw NumberError("first_tits_norm: need 3x3 matrices");
    return mat_det(x) + mu * mat_det(y) + mat_det(z) / mu - mat_trace(mat_mul(mat_mul(x, y), z));
}

}  // namespace toruslab
