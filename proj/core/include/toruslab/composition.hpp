#pragma once

#include "toruslab/etale.hpp"
#include "toruslab/linalg.hpp"
#include "toruslab/quadratic.hpp"

#include <array>
#include <vector>

namespace toruslab {

/// Composition algebra over Q built by Cayley-Dickson doubling from 1 to 3
/// parameters (dimension 2, 4 or 8). The doubling product is fixed as
///   (x1,x2)(y1,y2) = (x1 y1 + g conj(y2) x2,  y2 x1 + x2 conj(y1))
/// with g the parameter introduced at that step; this convention is
/// normative for the whole repository.
class CompositionAlgebra {
public:
    explicit CompositionAlgebra(std::vector<Rational> params);

    const std::vector<Rational>& params() const { return params_; }
    std::size_t dim() const { return std::size_t(1) << params_.size(); }

    Vec zero() const { return Vec(dim(), Rational(0)); }
    Vec one() const;
    Vec basis(std::size_t i) const;

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec conj(const Vec& x) const;
    Vec add(const Vec& x, const Vec& y) const;
    Vec sub(const Vec& x, const Vec& y) const;
    Vec scale(const Rational& c, const Vec& x) const;

    /// Quadratic norm n(x); multiplicative, and x conj(x) = n(x) 1.
    Rational norm(const Vec& x) const;
    /// Polarized bilinear form N(x,y) = n(x+y) - n(x) - n(y); N(x,x) = 2n(x).
    Rational norm_bilinear(const Vec& x, const Vec& y) const;
    Rational trace(const Vec& x) const { return 2 * x[0]; }

    std::optional<Vec> inverse(const Vec& x) const;

    /// The norm form as the Pfister form <<a,b,c>>; its expansion is the
    /// diagonal of n on the coordinate basis.
    PfisterForm norm_form() const;

    bool is_split() const;

private:
    std::vector<Rational> params_;
    std::vector<Rational> norm_diag_;  // diagonal of n on the coordinate basis
};

/// Division test: no zero divisors iff the norm form is anisotropic.
bool is_division(const CompositionAlgebra& c);

/// K embeds into C, decided at the norm-form level: a split K embeds iff C
/// is split; a field K = Q(sqrt(alpha)) embeds iff <1,-alpha> divides n_C.
bool embeds_quadratic(const QuadraticEtale& k, const CompositionAlgebra& c);

/// Rank-3 hermitian structure on the orthogonal complement of K inside an
/// octonion algebra, h(x,y) = N(x,y) + alpha^{-1} N(j x, y) j for a
/// designated j with j^2 = alpha.
struct HermitianData {
    Rational alpha;
    std::array<Vec, 3> basis;               // K-basis of K-perp
    std::array<std::array<KElem, 3>, 3> gram;  // h(b_i, b_j)
};

HermitianData hermitian_structure(const CompositionAlgebra& c, const Vec& j);

/// h(x,y) for arbitrary vectors in K-perp (used by tests).
KElem hermitian_form(const CompositionAlgebra& c, const Vec& j, const Vec& x, const Vec& y);

}  // namespace toruslab
