#pragma once

#include "toruslab/numbers.hpp"

#include <vector>

namespace toruslab {

/// Dense univariate polynomial over Q, coefficients low degree first,
/// no trailing zeros (the zero polynomial is the empty vector).
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& v) { return Poly({v}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    Poly derivative() const;
    Rational eval(const Rational& at) const;
    Poly monic() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

/// g, u, v with g = gcd(a,b) monic and u*a + v*b = g.
std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b);

struct PolyFactor {
    Poly factor;  // monic irreducible
    int multiplicity;
};

/// Complete factorization over Q into monic irreducibles (the leading
/// coefficient is dropped). Zassenhaus: reduction mod a good prime,
/// Berlekamp splitting, Hensel lifting, subset recombination. Intended for
/// the small degrees (<= 12) arising from etale algebras at desk scale.
std::vector<PolyFactor> factor_rational(const Poly& f);

bool poly_is_irreducible(const Poly& f);

}  // namespace toruslab
