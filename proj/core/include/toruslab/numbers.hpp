#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace toruslab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a number-theoretic routine is handed an input it cannot
/// process (zero where nonzero is required, a factorization past the
/// trial-division bound, a composite where a prime is required).
class NumberError : public std::runtime_error {
public:
    explicit NumberError(const std::string& what) : std::runtime_error(what) {}
};

/// Trial-division bound for integer factorization. Inputs whose unfactored
/// cofactor exceeds the square of this bound raise NumberError.
inline constexpr long kFactorBound = 1'000'000;

Integer parse_integer(const std::string& s);

/// Parses "p" or "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& s);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& q);

bool is_prime(const Integer& n);

/// Prime factorization by trial division, smallest prime first.
/// The remaining cofactor after dividing out primes <= kFactorBound must be
/// 1 or a prime below kFactorBound^2.
std::vector<std::pair<Integer, int>> factor(Integer n);

/// Exponent of p in q. q must be nonzero.
int padic_valuation(const Rational& q, const Integer& p);

/// Quadratic residue symbol (a/p) in {-1, 0, +1} for an odd prime p.
int legendre_symbol(const Integer& a, const Integer& p);

bool is_square(const Rational& q);

/// Class of a nonzero rational in Q*/Q*^2, held as its square-free integer
/// representative with the sign carried.
class SquareClass {
public:
    SquareClass() : rep_(1) {}
    explicit SquareClass(const Integer& squarefree_rep);

    const Integer& representative() const { return rep_; }
    bool is_trivial() const { return rep_ == 1; }

    SquareClass operator*(const SquareClass& other) const;
    bool operator==(const SquareClass& other) const { return rep_ == other.rep_; }
    bool operator!=(const SquareClass& other) const { return rep_ != other.rep_; }

private:
    struct Unchecked {};
    SquareClass(Unchecked, const Integer& rep) : rep_(rep) {}
    friend SquareClass squarefree_part(const Rational& q);

    Integer rep_;
};

/// Square-free integer d with q = d * (square). q must be nonzero.
SquareClass squarefree_part(const Rational& q);

/// True iff a/b is a square in Q. Both must be nonzero.
bool same_square_class(const Rational& a, const Rational& b);

}  // namespace toruslab
