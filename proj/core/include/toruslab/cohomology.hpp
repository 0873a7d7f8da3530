#pragma once

#include "toruslab/torus.hpp"

#include <memory>
#include <optional>
#include <string>

namespace toruslab {

class AdmissibilityError : public NumberError {
public:
    explicit AdmissibilityError(const std::string& what) : NumberError(what) {}
};

enum class Verdict { True, False, Unknown };

std::string verdict_str(Verdict v);

/// Outcome of a norm-equation decision. `witness` carries an explicit
/// solution when one was constructed, `obstruction` the place certifying
/// failure. Unknown is a legal outcome: norm questions over cubic fields
/// are out of reach of the binary-form machinery.
struct VerdictReport {
    Verdict verdict = Verdict::Unknown;
    std::optional<Vec> witness;
    std::optional<Place> obstruction;
};

/// Representative (s, z) of V = {(s,z) in L* x K* : N_{L/Q}(s) = z conj(z)}.
struct CocyclePair {
    Vec s;    // L-element (3 coordinates)
    KElem z;  // K-element
};

/// Search budget for norm-equation witnesses, derived from the height
/// bound surfaced on the CLI. Boxes are enumerated deterministically.
struct SearchBudget {
    long height = 500;
    long radius3() const { return std::min<long>(height, 60); }
    long radius6() const { return height >= 1000 ? 3 : (height >= 20 ? 2 : 1); }
    long denom() const { return 4; }
};

/// Element of H^1(k, T) = V/~ held by a representative cocycle pair.
class CohomologyClass {
public:
    CohomologyClass(std::shared_ptr<const UnitaryTorus> parent, Vec s, KElem z);

    const CocyclePair& representative() const { return rep_; }
    const UnitaryTorus& torus() const { return *parent_; }
    const std::shared_ptr<const UnitaryTorus>& parent() const { return parent_; }

    CohomologyClass multiply(const CohomologyClass& o) const;
    CohomologyClass inverse() const;
    bool is_identity_representative() const;

private:
    std::shared_ptr<const UnitaryTorus> parent_;
    CocyclePair rep_;
};

/// Validates V-membership (throws AdmissibilityError) and wraps the pair.
CohomologyClass make_class(std::shared_ptr<const UnitaryTorus> t, const Vec& s, const KElem& z);

/// (s,z) ~ (s', z') with witness b: s' = b s tau(b), z' = N_{E/K}(b) z.
bool verify_twist_witness(const UnitaryTorus& t, const CocyclePair& from, const CocyclePair& to,
                          const Vec& b);

/// Triviality witness: s = b tau(b) and z = N_{E/K}(b).
bool verify_trivial_witness(const UnitaryTorus& t, const CocyclePair& pair, const Vec& b);

/// Twist a representative by b (the equivalence relation in the forward
/// direction); used by the well-definedness property tests.
CocyclePair twist(const UnitaryTorus& t, const CocyclePair& pair, const Vec& b);

/// Splitting of H^1 for n = 3 (r = 1): the K-part [(1, mu^{-1} conj(mu))]
/// and the L-coset [u] of S / N_{E/L}(E*).
struct H1Decomposition {
    KElem k_part;
    Vec l_part;
};

H1Decomposition decompose(const CohomologyClass& c);

/// Section psi([u]) = [(u, mu^2 conj(mu)^{-1})] for any mu with
/// N_{L/Q}(u) = mu conj(mu); the caller supplies that mu.
CocyclePair psi_section(const UnitaryTorus& t, const Vec& u, const KElem& mu);

/// Triviality decision. Definitive for split and most mixed L (binary-form
/// reductions over Q); bounded witness search with Unknown fallback for
/// cubic fields.
VerdictReport is_trivial(const CohomologyClass& c, const SearchBudget& budget = {});

/// Membership of mu in N_{E/K}(E*); constructive for split components.
std::optional<Vec> solve_norm_E_over_K(const UnitaryAlgebra& ealg, const KElem& mu,
                                       const SearchBudget& budget = {});

/// Membership of u (an L-element) in N_{E/L}(E*) = {b tau(b)}.
VerdictReport norm_E_over_L_member(const UnitaryAlgebra& ealg, const Vec& u,
                                   const SearchBudget& budget = {});

/// Symbolic description of H^1(k, T) for the shape of T, with a triviality
/// verdict and a certified nontrivial class when one is constructible.
struct H1Description {
    std::string shape;
    std::string group;
    Verdict trivial = Verdict::Unknown;
    std::optional<CocyclePair> nontrivial_class;
    std::optional<Place> obstruction;
};

H1Description h1_description(const UnitaryTorus& t);

/// H^1 of the full unitary group U(E, tau): L*/N_{E/L}(E*), exposed as a
/// descriptor string plus the membership test above.
std::string h1_full_unitary_group(const UnitaryTorus& t);

}  // namespace toruslab
