#pragma once

#include "toruslab/etale.hpp"
#include "toruslab/quadratic.hpp"
#include "toruslab/rng.hpp"

#include <optional>
#include <string>

namespace toruslab {

enum class TorusShapeTag { SplitRank2, WeilRestriction, NormOneSquare, General };

struct TorusShape {
    TorusShapeTag tag = TorusShapeTag::General;
    /// WeilRestriction: the square class of the restricted field K0.
    /// NormOneSquare: the square class of K.
    std::optional<Rational> field_alpha;
    std::string str() const;
};

/// T = SU(E, tau) for (E, tau) the K-unitary algebra of the pair (L, K),
/// with its binary form q_T = <1, -alpha delta>.
class UnitaryTorus {
public:
    UnitaryTorus(CubicEtale l, QuadraticEtale k);

    const UnitaryAlgebra& ealg() const { return ealg_; }
    const CubicEtale& L() const { return ealg_.L(); }
    const QuadraticEtale& K() const { return ealg_.K(); }

    SquareClass alpha() const { return K().alpha_class(); }
    SquareClass delta() const { return L().discriminant(); }

    /// Recomputed on every call; never cached.
    QuadraticForm q_t() const;

    /// alpha delta a square, equivalently q_T hyperbolic.
    bool is_distinguished() const;

    /// Closed-form shape of the torus. General covers the cubic-field case
    /// and the mixed pair with a quadratic field K different from K0,
    /// where no closed-form description is implemented.
    TorusShape classify() const;

    /// x tau(x) = 1 and N_{E/K}(x) = 1.
    bool is_point(const Vec& x) const;

    /// Rational points produced by the shape parameterizations (split
    /// components, Hilbert-90 in field components). The General shape with
    /// a field K yields only scalar points here.
    std::vector<Vec> sample_points(Rng& rng, int count) const;

private:
    UnitaryAlgebra ealg_;
};

struct ShapeCheckReport {
    std::string shape;
    int samples = 0;
    bool images_are_points = true;
    bool multiplicative = true;
    bool round_trip = true;
    bool onto_sampled_points = true;
    bool passed() const {
        return images_are_points && multiplicative && round_trip && onto_sampled_points;
    }
};

/// Verifies the explicit point-level bijection for the detected shape on
/// sampled points, in both directions. Throws on the General shape.
ShapeCheckReport shape_isomorphism_check(const UnitaryTorus& t, Rng& rng, int samples = 120);

}  // namespace toruslab
