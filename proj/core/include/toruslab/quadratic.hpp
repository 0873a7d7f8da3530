#pragma once

#include "toruslab/linalg.hpp"
#include "toruslab/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toruslab {

/// A place of Q: the real place or a finite prime.
struct Place {
    bool real = true;
    Integer p = 0;

    static Place infinity() { return Place{}; }
    static Place finite(const Integer& prime);

    bool operator==(const Place& o) const { return real == o.real && p == o.p; }
    bool operator<(const Place& o) const {
        if (real != o.real) return real;  // the real place sorts first
        return p < o.p;
    }
    std::string str() const { return real ? "infinity" : p.str(); }
};

/// Hilbert symbol (a,b)_v in {-1,+1}: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over the completion at v. a, b nonzero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Nondegenerate diagonal quadratic form <a_1,...,a_n> over Q.
class QuadraticForm {
public:
    explicit QuadraticForm(std::vector<Rational> diagonal);

    int dimension() const { return static_cast<int>(diag_.size()); }
    const std::vector<Rational>& entries() const { return diag_; }

    QuadraticForm orthogonal_sum(const QuadraticForm& o) const;
    QuadraticForm scaled(const Rational& c) const;
    Rational eval(const std::vector<Rational>& x) const;

    int signature() const;  // #positive - #negative entries
    SquareClass det_class() const;

    static QuadraticForm hyperbolic(int planes);

    std::vector<std::string> str_entries() const;

private:
    std::vector<Rational> diag_;
};

/// The real place, 2, and the odd primes dividing some entry.
std::vector<Place> relevant_places(const QuadraticForm& f);

/// Hasse invariant prod_{i<j} (a_i, a_j)_v.
int hasse_invariant(const QuadraticForm& f, const Place& v);

bool is_local_square(const Rational& a, const Place& v);

bool locally_isotropic(const QuadraticForm& f, const Place& v);

/// Hasse-Minkowski decision: f has a nontrivial rational zero.
/// Dimension split: 1 never; 2 iff -a1 a2 is a square; 3 and 4 via all
/// local conditions; >= 5 finite places are automatic, only the real
/// place can obstruct.
bool is_isotropic(const QuadraticForm& f);

/// Witt-trivial over Q (isometric to a sum of hyperbolic planes), decided
/// through the complete invariants dimension / signature / determinant /
/// Hasse at the relevant places.
bool is_hyperbolic(const QuadraticForm& f);

bool isometric_over_q(const QuadraticForm& f, const QuadraticForm& g);

/// b in D_Q(f), decided as isotropy of f perp <-b>. b nonzero.
bool represents(const QuadraticForm& f, const Rational& b);

/// Pfister form <<a_1,...,a_n>> = <1,-a_1> x ... x <1,-a_n>.
class PfisterForm {
public:
    explicit PfisterForm(std::vector<Rational> slots);

    int fold() const { return static_cast<int>(slots_.size()); }
    const std::vector<Rational>& slots() const { return slots_; }
    const QuadraticForm& expansion() const { return expansion_; }

    /// Pure part: expansion = <1> perp pure.
    QuadraticForm pure_part() const;

    PfisterForm tensor(const PfisterForm& o) const;

private:
    std::vector<Rational> slots_;
    QuadraticForm expansion_;
};

inline PfisterForm pfister(std::vector<Rational> slots) { return PfisterForm(std::move(slots)); }

/// e_n(pi) = 0, i.e. pi hyperbolic (equivalently isotropic, for Pfister forms).
bool arason_trivial(const PfisterForm& pi);

/// True iff pi = <1,-d> x rho for some Pfister rho. Decided by the pure
/// subform criterion: hyperbolic pi always factors; anisotropic pi factors
/// iff the pure part represents -d.
bool pfister_divides_1fold(const Rational& d, const PfisterForm& pi);

// ---- bounded search for explicit zeros -------------------------------------

/// Nontrivial integer zero of f with all |x_i| <= max_height, or nullopt.
/// Searches subforms first, then boxes of growing radius. Deterministic.
std::optional<std::vector<Integer>> isotropy_witness(const QuadraticForm& f, long max_height);

/// Exhaustively certifies that no nontrivial zero of height <= height
/// exists (height = max |coordinate| of a primitive integer zero).
bool no_zero_up_to_height(const QuadraticForm& f, long height);

/// Rational vector x with f(x) = b, from an isotropy witness of
/// f perp <-b>; nullopt when f does not represent b or no witness was
/// found below the height bound.
std::optional<std::vector<Rational>> representation_witness(const QuadraticForm& f,
                                                            const Rational& b, long max_height);

}  // namespace toruslab
