#include "toruslab/numbers.hpp"

namespace toruslab {

Integer parse_integer(const std::string& s) {
    if (s.empty()) throw NumberError("empty integer literal");
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw NumberError("bad integer literal: " + s);
    }
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw NumberError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw NumberError("zero denominator in: " + s);
        return Rational(num, den);
    } catch (const NumberError&) {
        throw;
    } catch (const std::exception&) {
        throw NumberError("bad rational literal: " + s);
    }
}

std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<Integer, int>> factor(Integer n) {
    if (n == 0) throw NumberError("factor(0)");
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, int>> out;
    auto strip = [&](const Integer& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Integer p = 5; p <= kFactorBound && p * p <= n; p += (p % 6 == 5) ? 2 : 4) {
        strip(p);
    }
    if (n > 1) {
        // Cofactor has no prime factor <= kFactorBound, so it is prime if it
        // fits below the bound squared; otherwise we refuse to guess.
        if (n > Integer(kFactorBound) * Integer(kFactorBound))
            throw NumberError("factorization exceeds trial-division bound: " + n.str());
        out.emplace_back(n, 1);
    }
    return out;
}

int padic_valuation(const Rational& q, const Integer& p) {
    if (q == 0) throw NumberError("padic_valuation of zero");
    if (p < 2) throw NumberError("padic_valuation: p must be a prime");
    int v = 0;
    Integer n = numerator(q);
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    Integer d = denominator(q);
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

int legendre_symbol(const Integer& a, const Integer& p) {
    if (p == 2 || !is_prime(p)) throw NumberError("legendre_symbol: p must be an odd prime");
    Integer r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Integer e = powm(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

bool is_square(const Rational& q) {
    if (q < 0) return false;
    if (q == 0) return true;
    Integer n = numerator(q), d = denominator(q);
    Integer rn = sqrt(n), rd = sqrt(d);
    return rn * rn == n && rd * rd == d;
}

SquareClass::SquareClass(const Integer& squarefree_rep) : rep_(squarefree_rep) {
    if (rep_ == 0) throw NumberError("SquareClass of zero");
    for (const auto& [p, e] : factor(rep_)) {
        if (e > 1) throw NumberError("SquareClass representative not square-free: " + rep_.str());
        (void)p;
    }
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
    return squarefree_part(Rational(rep_ * other.rep_));
}

SquareClass squarefree_part(const Rational& q) {
    if (q == 0) throw NumberError("squarefree_part of zero");
    // q = n/d has the square class of n*d.
    Integer nd = numerator(q) * denominator(q);
    Integer rep = nd < 0 ? Integer(-1) : Integer(1);
    for (const auto& [p, e] : factor(nd)) {
        if (e % 2 == 1) rep *= p;
    }
    return SquareClass(SquareClass::Unchecked{}, rep);
}

bool same_square_class(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw NumberError("same_square_class of zero");
    return is_square(a / b);
}

}  // namespace toruslab
