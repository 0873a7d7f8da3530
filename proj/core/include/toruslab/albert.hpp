#pragma once

#include "toruslab/composition.hpp"

#include <array>

namespace toruslab {

/// Element of H_3(C, Gamma): diagonal scalars xi_i and octonions c_i in the
/// parameterization
///   [ xi1            c3              (g3/g1) conj(c2) ]
///   [ (g1/g2) conj(c3)  xi2          c1               ]
///   [ c2             (g2/g3) conj(c1)  xi3            ]
struct AlbertElement {
    std::array<Rational, 3> xi;
    std::array<Vec, 3> c;
};

/// Reduced Albert algebra of Gamma-hermitian 3x3 octonion matrices with
/// the symmetrized product X o Y = (XY + YX)/2. Dimension 27 over Q.
class ReducedAlbert {
public:
    ReducedAlbert(CompositionAlgebra c, std::array<Rational, 3> gamma);

    const CompositionAlgebra& coefficient_algebra() const { return c_; }
    const std::array<Rational, 3>& gamma() const { return gamma_; }

    AlbertElement zero() const;
    AlbertElement identity() const;
    AlbertElement diagonal(const Rational& a, const Rational& b, const Rational& d) const;
    AlbertElement element(const std::array<Rational, 3>& xi, const std::array<Vec, 3>& c) const;

    AlbertElement add(const AlbertElement& x, const AlbertElement& y) const;
    AlbertElement scale(const Rational& s, const AlbertElement& x) const;
    bool equal(const AlbertElement& x, const AlbertElement& y) const;

    /// X o Y, computed through the full octonion matrix product and checked
    /// against the hermitian constraint before re-extracting coordinates.
    AlbertElement product(const AlbertElement& x, const AlbertElement& y) const;

    Rational trace(const AlbertElement& x) const;

    /// Generic trace, quadratic trace and cubic norm (T, S, N), with
    /// S = (T(X)^2 - T(X o X))/2 and N from the Newton identity
    /// 6N = T^3 - 3 T T(X^2) + 2 T(X^3).
    std::array<Rational, 3> trace_quadratic_norm(const AlbertElement& x) const;

    /// X o (X o X) - T (X o X) + S X - N I; identically zero in a Jordan
    /// algebra of degree 3.
    AlbertElement degree3_identity_defect(const AlbertElement& x) const;

    /// Coordinates as a flat 27-vector (xi, c1, c2, c3).
    Vec flatten(const AlbertElement& x) const;
    AlbertElement unflatten(const Vec& v) const;

private:
    CompositionAlgebra c_;
    std::array<Rational, 3> gamma_;
};

/// Cubic norm of the first Tits construction on M_3(Q)^3:
/// N(x, y, z) = det x + mu det y + mu^{-1} det z - tr(x y z).
Rational first_tits_norm(const Rational& mu, const Mat& x, const Mat& y, const Mat& z);

}  // namespace toruslab
