#pragma once

#include "toruslab/linalg.hpp"
#include "toruslab/numbers.hpp"
#include "toruslab/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toruslab {

/// Commutative unital Q-algebra given by structure constants in a fixed
/// basis. All etale algebras in the repository (K, L, E = L x K, tensor
/// squares) are instances.
class EtaleAlgebra {
public:
    /// table[i][j] = coordinates of b_i * b_j; unit = coordinates of 1.
    EtaleAlgebra(std::string name, std::vector<std::vector<Vec>> table, Vec unit);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return unit_.size(); }
    const Vec& unit() const { return unit_; }
    Vec zero() const { return Vec(dim(), Rational(0)); }

    Vec mul(const Vec& x, const Vec& y) const;
    Vec add(const Vec& x, const Vec& y) const;
    Vec sub(const Vec& x, const Vec& y) const;
    Vec scale(const Rational& c, const Vec& x) const;
    Vec power(const Vec& x, long e) const;  // e >= 0
    std::optional<Vec> inverse(const Vec& x) const;
    bool is_unit(const Vec& x) const { return norm(x) != 0; }

    /// Regular representation of x (multiplication matrix).
    Mat mult_matrix(const Vec& x) const;
    Rational norm(const Vec& x) const;
    Rational trace(const Vec& x) const;
    Poly min_poly(const Vec& x) const;

    /// Gram matrix of (x,y) -> Tr(xy) on the basis.
    Mat trace_gram() const;

    /// Complete orthogonal set of primitive idempotents, found by locating
    /// a primitive element and splitting its minimal polynomial. Sorted
    /// deterministically. Throws when the algebra is not etale.
    std::vector<Vec> idempotents() const;

    /// Q-dimension of the ideal e*A for an idempotent e.
    std::size_t block_rank(const Vec& idempotent) const;

private:
    std::string name_;
    std::vector<std::vector<Vec>> table_;
    Vec unit_;
};

/// A (X) B with basis a_i (X) b_j at index i*dim(B)+j.
EtaleAlgebra tensor_product(const EtaleAlgebra& a, const EtaleAlgebra& b);

/// Element of a quadratic etale algebra K = Q[w]/(w^2 - alpha), written
/// a + b w.
struct KElem {
    Rational a, b;
    bool operator==(const KElem& o) const { return a == o.a && b == o.b; }
};

/// K = Q(sqrt(alpha)); alpha is normalized to its square-free representative.
/// Split exactly when alpha = 1.
class QuadraticEtale {
public:
    explicit QuadraticEtale(const Rational& alpha);

    const SquareClass& alpha_class() const { return alpha_; }
    Rational alpha() const { return Rational(alpha_.representative()); }
    bool split() const { return alpha_.is_trivial(); }
    const EtaleAlgebra& algebra() const { return alg_; }

    KElem conj(const KElem& x) const { return {x.a, -x.b}; }
    KElem mul(const KElem& x, const KElem& y) const;
    KElem add(const KElem& x, const KElem& y) const { return {x.a + y.a, x.b + y.b}; }
    KElem sub(const KElem& x, const KElem& y) const { return {x.a - y.a, x.b - y.b}; }
    std::optional<KElem> inverse(const KElem& x) const;
    Rational norm(const KElem& x) const { return x.a * x.a - alpha() * x.b * x.b; }
    Rational trace(const KElem& x) const { return 2 * x.a; }
    bool is_zero(const KElem& x) const { return x.a == 0 && x.b == 0; }
    KElem one() const { return {Rational(1), Rational(0)}; }

    /// Norm-one element from the Hilbert 90 parameterization conj(z)/z.
    KElem norm_one_from(const KElem& z) const;

private:
    SquareClass alpha_;
    EtaleAlgebra alg_;
};

enum class CubicKind { SplitTriple, MixedPair, Field };

/// Cubic etale algebra L over Q in one of its three shapes. The fixed
/// basis is: idempotents (split), {(1,0),(0,1),(0,w0)} (mixed),
/// {1, x, x^2} (field).
class CubicEtale {
public:
    static CubicEtale split_triple();
    static CubicEtale mixed(const Rational& alpha0);  // L = Q x Q(sqrt(alpha0))
    static CubicEtale field(const Poly& min_poly);    // monic integral irreducible cubic

    CubicKind kind() const { return kind_; }
    const EtaleAlgebra& algebra() const { return alg_; }
    const Poly& min_poly() const { return minpoly_; }      // field kind only
    Rational alpha0() const { return alpha0_; }            // mixed kind only

    /// delta with Disc(L) = Q(sqrt(delta)), computed as the determinant of
    /// the trace bilinear form.
    SquareClass discriminant() const;

    /// All Q-algebra automorphisms as matrices on the fixed basis.
    /// S3 for the split triple, order 2 for the mixed shape, and for a
    /// cubic field C3 when the discriminant is a square, else trivial.
    std::vector<Mat> automorphisms() const;

    std::string kind_str() const;

private:
    CubicEtale(CubicKind kind, EtaleAlgebra alg, Poly minpoly, Rational alpha0)
        : kind_(kind), alg_(std::move(alg)), minpoly_(std::move(minpoly)), alpha0_(alpha0) {}

    CubicKind kind_;
    EtaleAlgebra alg_;
    Poly minpoly_;
    Rational alpha0_;
};

/// Roots of the defining cubic inside the field L itself, found through the
/// block decomposition of L (X) L. One root (the class of x) when the
/// discriminant is not a square, all three when it is.
std::vector<Vec> roots_in_field(const CubicEtale& l);

/// (E, tau) = (L (X) K, 1 (X) conjugation). Basis of E interleaved:
/// b_0 (X) 1, b_0 (X) w, b_1 (X) 1, ... The fixed algebra of tau is L.
class UnitaryAlgebra {
public:
    UnitaryAlgebra(CubicEtale l, QuadraticEtale k);

    const CubicEtale& L() const { return l_; }
    const QuadraticEtale& K() const { return k_; }
    const EtaleAlgebra& E() const { return e_; }

    Vec tau(const Vec& x) const;
    Vec embed_L(const Vec& l) const;
    Vec embed_K(const KElem& k) const;

    /// x as a rank-3 K-vector over the basis b_i (X) 1.
    std::array<KElem, 3> k_components(const Vec& x) const;
    Vec from_k_components(const std::array<KElem, 3>& c) const;

    /// Determinant of multiplication by x on E as a K-module.
    KElem norm_E_over_K(const Vec& x) const;

    /// N_{E/L}(x) = x tau(x), returned as an L-element.
    Vec norm_E_over_L(const Vec& x) const;

    /// L-part / w-part split of x (x = l0 (X) 1 + l1 (X) w).
    std::pair<Vec, Vec> parts(const Vec& x) const;

    bool is_L_element(const Vec& x) const;

    /// Extend an automorphism of L to the K-linear automorphism phi (X) 1.
    Vec apply_L_automorphism(const Mat& phi, const Vec& x) const;

    /// Split-K presentation E = L x L with tau the switch: the element with
    /// plus-projection u and minus-projection v (requires K split).
    Vec from_switch_pair(const Vec& u, const Vec& v) const;
    /// Inverse of the above: (pi_plus(x), pi_minus(x)).
    std::pair<Vec, Vec> to_switch_pair(const Vec& x) const;

private:
    CubicEtale l_;
    QuadraticEtale k_;
    EtaleAlgebra e_;
};

/// Consistency report for the canonical decomposition checks.
struct IdempotentReport {
    std::size_t count = 0;
    std::vector<std::size_t> block_ranks;
    bool complete = false;  // idempotents sum to 1 and are orthogonal
};

IdempotentReport decompose_report(const EtaleAlgebra& a);

}  // namespace toruslab
