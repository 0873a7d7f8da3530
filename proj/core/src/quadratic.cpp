#include "toruslab/quadratic.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace toruslab {

Place Place::finite(const Integer& prime) {
    if (!is_prime(prime)) throw NumberError("Place: not a prime: " + prime.str());
    Place v;
    v.real = false;
    v.p = prime;
    return v;
}

namespace {

// u with v_p(u) = 0 obtained by stripping all powers of p.
Rational unit_part(const Rational& a, const Integer& p) {
    Integer n = numerator(a), d = denominator(a);
    while (n % p == 0) n /= p;
    while (d % p == 0) d /= p;
    return Rational(n, d);
}

// residue mod 8 of a 2-adic unit written n/d; d odd implies 1/d = d mod 8
long mod8(const Rational& u) {
    Integer m = (numerator(u) * denominator(u)) % 8;
    if (m < 0) m += 8;
    return static_cast<long>(m);
}

int eps2(const Rational& u) {  // (u-1)/2 mod 2
    long m = mod8(u);
    return (m == 3 || m == 7) ? 1 : 0;
}

int omega2(const Rational& u) {  // (u^2-1)/8 mod 2
    long m = mod8(u);
    return (m == 3 || m == 5) ? 1 : 0;
}

int legendre_of_unit(const Rational& u, const Integer& p) {
    return legendre_symbol(numerator(u), p) * legendre_symbol(denominator(u), p);
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw NumberError("hilbert_symbol: zero argument");
    if (v.real) return (a < 0 && b < 0) ? -1 : 1;
    const Integer& p = v.p;
    int alpha = padic_valuation(a, p), beta = padic_valuation(b, p);
    Rational u = unit_part(a, p), w = unit_part(b, p);
    if (p == 2) {
        int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    int sign = 1;
    if ((alpha & 1) && (beta & 1) && p % 4 == 3) sign = -sign;
    if (beta & 1) sign *= legendre_of_unit(u, p);
    if (alpha & 1) sign *= legendre_of_unit(w, p);
    return sign;
}

QuadraticForm::QuadraticForm(std::vector<Rational> diagonal) : diag_(std::move(diagonal)) {
    if (diag_.empty()) throw NumberError("QuadraticForm: empty diagonal");
    for (const auto& a : diag_)
        if (a == 0) throw NumberError("QuadraticForm: zero diagonal entry");
}

QuadraticForm QuadraticForm::orthogonal_sum(const QuadraticForm& o) const {
    std::vector<Rational> d = diag_;
    d.insert(d.end(), o.diag_.begin(), o.diag_.end());
    return QuadraticForm(std::move(d));
}

QuadraticForm QuadraticForm::scaled(const Rational& c) const {
    if (c == 0) throw NumberError("QuadraticForm: zero scale");
    std::vector<Rational> d = diag_;
    for (auto& x : d) x *= c;
    return QuadraticForm(std::move(d));
}

Rational QuadraticForm::eval(const std::vector<Rational>& x) const {
    if (x.size() != diag_.size()) throw NumberError("QuadraticForm::eval: dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < diag_.size(); ++i) s += diag_[i] * x[i] * x[i];
    return s;
}

int QuadraticForm::signature() const {
    int s = 0;
    for (const auto& a : diag_) s += (a > 0) ? 1 : -1;
    return s;
}

SquareClass QuadraticForm::det_class() const {
    Rational d(1);
    for (const auto& a : diag_) d *= a;
    return squarefree_part(d);
}

QuadraticForm QuadraticForm::hyperbolic(int planes) {
    std::vector<Rational> d;
    for (int i = 0; i < planes; ++i) {
        d.emplace_back(1);
        d.emplace_back(-1);
    }
    return QuadraticForm(std::move(d));
}

std::vector<std::string> QuadraticForm::str_entries() const {
    std::vector<std::string> out;
    for (const auto& a : diag_) out.push_back(rational_str(a));
    return out;
}

std::vector<Place> relevant_places(const QuadraticForm& f) {
    std::set<Integer> primes{Integer(2)};
    for (const auto& a : f.entries()) {
        for (const auto& [p, e] : factor(numerator(a) * denominator(a))) {
            primes.insert(p);
            (void)e;
        }
    }
    std::vector<Place> out{Place::infinity()};
    for (const auto& p : primes) out.push_back(Place::finite(p));
    return out;
}

int hasse_invariant(const QuadraticForm& f, const Place& v) {
    const auto& a = f.entries();
    int s = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) s *= hilbert_symbol(a[i], a[j], v);
    return s;
}

bool is_local_square(const Rational& a, const Place& v) {
    if (a == 0) throw NumberError("is_local_square: zero");
    if (v.real) return a > 0;
    int val = padic_valuation(a, v.p);
    if (val % 2 != 0) return false;
    Rational u = unit_part(a, v.p);
    if (v.p == 2) return mod8(u) == 1;
    return legendre_of_unit(u, v.p) == 1;
}

bool locally_isotropic(const QuadraticForm& f, const Place& v) {
    const auto& a = f.entries();
    int n = f.dimension();
    if (n <= 1) return false;
    if (v.real) {
        bool pos = false, neg = false;
        for (const auto& x : a) (x > 0 ? pos : neg) = true;
        return pos && neg;
    }
    switch (n) {
        case 2:
            return is_local_square(-a[0] * a[1], v);
        case 3:
            return hilbert_symbol(-a[0] * a[2], -a[1] * a[2], v) == 1;
        case 4: {
            Rational d = a[0] * a[1] * a[2] * a[3];
            if (!is_local_square(d, v)) return true;
            return hasse_invariant(f, v) == hilbert_symbol(Rational(-1), Rational(-1), v);
        }
        default:
            return true;  // rank >= 5 over Q_p is always isotropic
    }
}

bool is_isotropic(const QuadraticForm& f) {
    int n = f.dimension();
    if (n <= 1) return false;
    if (n == 2) return is_square(-f.entries()[0] * f.entries()[1]);
    for (const auto& v : relevant_places(f)) {
        if (!locally_isotropic(f, v)) return false;
    }
    return true;
}

bool isometric_over_q(const QuadraticForm& f, const QuadraticForm& g) {
    if (f.dimension() != g.dimension()) return false;
    if (f.signature() != g.signature()) return false;
    if (!(f.det_class() == g.det_class())) return false;
    std::set<Place> places;
    for (const auto& v : relevant_places(f)) places.insert(v);
    for (const auto& v : relevant_places(g)) places.insert(v);
    for (const auto& v : places) {
        if (v.real) continue;  // covered by the signature
        if (hasse_invariant(f, v) != hasse_invariant(g, v)) return false;
    }
    return true;
}

bool is_hyperbolic(const QuadraticForm& f) {
    if (f.dimension() % 2 != 0) return false;
    return isometric_over_q(f, QuadraticForm::hyperbolic(f.dimension() / 2));
}

bool represents(const QuadraticForm& f, const Rational& b) {
    if (b == 0) throw NumberError("represents: b must be nonzero");
    for (const auto& a : f.entries())
        if (same_square_class(a, b)) return true;
    return is_isotropic(f.orthogonal_sum(QuadraticForm({-b})));
}

PfisterForm::PfisterForm(std::vector<Rational> slots)
    : slots_(std::move(slots)), expansion_(QuadraticForm({Rational(1)})) {
    std::vector<Rational> exp{Rational(1)};
    for (const auto& s : slots_) {
        if (s == 0) throw NumberError("PfisterForm: zero slot");
        std::size_t half = exp.size();
        for (std::size_t i = 0; i < half; ++i) exp.push_back(-s * exp[i]);
    }
    expansion_ = QuadraticForm(std::move(exp));
}

QuadraticForm PfisterForm::pure_part() const {
    const auto& e = expansion_.entries();
    if (e.size() < 2) throw NumberError("PfisterForm: 0-fold form has no pure part");
    return QuadraticForm(std::vector<Rational>(e.begin() + 1, e.end()));
}

PfisterForm PfisterForm::tensor(const PfisterForm& o) const {
    std::vector<Rational> s = slots_;
    s.insert(s.end(), o.slots_.begin(), o.slots_.end());
    return PfisterForm(std::move(s));
}

bool arason_trivial(const PfisterForm& pi) { return is_hyperbolic(pi.expansion()); }

bool pfister_divides_1fold(const Rational& d, const PfisterForm& pi) {
    if (d == 0) throw NumberError("pfister_divides_1fold: zero d");
    if (pi.fold() < 1) return false;
    if (is_hyperbolic(pi.expansion())) return true;
    return represents(pi.pure_part(), -d);
}

// ---- bounded zero search ----------------------------------------------------

namespace {

using std::int64_t;

// Form scaled to integer coefficients; zeros are unchanged.
std::vector<int64_t> scale_to_int64(const QuadraticForm& f, long height) {
    Integer l = 1;
    for (const auto& a : f.entries()) l = lcm(l, denominator(a));
    std::vector<int64_t> out;
    Integer h(height), guard = Integer(1) << 62;
    for (const auto& a : f.entries()) {
        Integer c = numerator(a) * (l / denominator(a));
        if (abs(c) * h * h * Integer(f.dimension()) > guard)
            throw NumberError("zero search: coefficients too large for the height bound");
        out.push_back(static_cast<int64_t>(c));
    }
    return out;
}

int64_t isqrt64(int64_t t) {
    if (t < 2) return t;
    int bits = 64 - __builtin_clzll(static_cast<unsigned long long>(t));
    int64_t x = int64_t(1) << ((bits + 1) / 2);
    while (true) {
        int64_t y = (x + t / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

std::optional<int64_t> perfect_sqrt(int64_t t) {
    if (t < 0) return std::nullopt;
    int64_t r = isqrt64(t);
    if (r * r == t) return r;
    return std::nullopt;
}

bool all_zero(const std::vector<Integer>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Direct box search at radius h for small dimensions. When `exhaustive`
// the search must cover the whole box or throw; otherwise it may give up.
std::optional<std::vector<Integer>> direct_search(const std::vector<int64_t>& a, long h,
                                                  bool exhaustive) {
    std::size_t n = a.size();
    if (n == 2) {
        for (int64_t x = 0; x <= h; ++x)
            for (int64_t y = (x == 0 ? 1 : 0); y <= h; ++y)
                if (a[0] * x * x + a[1] * y * y == 0) return std::vector<Integer>{x, y};
        return std::nullopt;
    }
    if (n == 3) {
        for (int64_t x = 0; x <= h; ++x)
            for (int64_t y = 0; y <= h; ++y) {
                int64_t s = a[0] * x * x + a[1] * y * y;
                if (s % a[2] != 0) continue;
                int64_t t = -s / a[2];
                auto z = perfect_sqrt(t);
                if (z && *z <= h && !(x == 0 && y == 0 && *z == 0))
                    return std::vector<Integer>{x, y, *z};
            }
        return std::nullopt;
    }
    if (n == 4 || n == 5) {
        // meet in the middle: mark values of a0 x^2 + a1 y^2
        int64_t m = (std::abs(a[0]) + std::abs(a[1])) * h * h;
        if (m > (int64_t(1) << 33)) {
            if (exhaustive) throw NumberError("zero search: bitmap exceeds the memory budget");
            return std::nullopt;
        }
        std::vector<bool> seen(static_cast<std::size_t>(2 * m + 1), false);
        for (int64_t x = 0; x <= h; ++x)
            for (int64_t y = 0; y <= h; ++y)
                seen[static_cast<std::size_t>(a[0] * x * x + a[1] * y * y + m)] = true;
        auto recover = [&](int64_t value, int64_t z, int64_t w,
                           int64_t v) -> std::optional<std::vector<Integer>> {
            for (int64_t x = 0; x <= h; ++x) {
                int64_t r = value - a[0] * x * x;
                if (r % a[1] != 0) continue;
                auto y = perfect_sqrt(r / a[1]);
                if (!y || *y > h) continue;
                std::vector<Integer> out{x, *y, z, w};
                if (a.size() == 5) out.push_back(v);
                if (!all_zero(out)) return out;
            }
            return std::nullopt;
        };
        for (int64_t z = 0; z <= h; ++z)
            for (int64_t w = 0; w <= h; ++w) {
                if (n == 4) {
                    int64_t u = -(a[2] * z * z + a[3] * w * w);
                    if (u < -m || u > m || !seen[static_cast<std::size_t>(u + m)]) continue;
                    if (auto r = recover(u, z, w, 0)) return r;
                } else {
                    for (int64_t v = 0; v <= h; ++v) {
                        int64_t u = -(a[2] * z * z + a[3] * w * w + a[4] * v * v);
                        if (u < -m || u > m || !seen[static_cast<std::size_t>(u + m)]) continue;
                        if (auto r = recover(u, z, w, v)) return r;
                    }
                }
            }
        return std::nullopt;
    }
    return std::nullopt;
}

long search_cap(std::size_t dim) {
    switch (dim) {
        case 2: return 1000000;
        case 3: return 20000;
        case 4: return 4000;
        default: return 600;
    }
}

}  // namespace

std::optional<std::vector<Integer>> isotropy_witness(const QuadraticForm& f, long max_height) {
    if (!is_isotropic(f)) return std::nullopt;
    int n = f.dimension();
    if (n == 2) {
        // (x/y)^2 = -a2/a1, a square in lowest terms
        Rational r = -f.entries()[1] / f.entries()[0];
        Integer num = numerator(r), den = denominator(r);
        return std::vector<Integer>{sqrt(num), sqrt(den)};
    }
    // prefer an isotropic subform: its zero extends by 0
    for (int drop = 0; drop < n; ++drop) {
        std::vector<Rational> sub;
        for (int i = 0; i < n; ++i)
            if (i != drop) sub.push_back(f.entries()[static_cast<std::size_t>(i)]);
        QuadraticForm g(sub);
        if (!is_isotropic(g)) continue;
        auto w = isotropy_witness(g, max_height);
        if (!w) continue;
        std::vector<Integer> out;
        out.reserve(static_cast<std::size_t>(n));
        std::size_t k = 0;
        for (int i = 0; i < n; ++i)
            out.push_back(i == drop ? Integer(0) : (*w)[k++]);
        return out;
    }
    long cap = std::min(max_height, search_cap(static_cast<std::size_t>(n)));
    auto a = scale_to_int64(f, cap);
    for (long h = 4; h / 2 < cap; h *= 2) {
        long radius = std::min(h, cap);
        if (auto w = direct_search(a, radius, false)) return w;
        if (radius == cap) break;
    }
    return std::nullopt;
}

bool no_zero_up_to_height(const QuadraticForm& f, long height) {
    int sig = f.signature();
    if (sig == f.dimension() || sig == -f.dimension()) return true;  // definite
    int n = f.dimension();
    if (n >= 5) {
        // indefinite rank >= 5 over Q is always isotropic; callers only ask
        // about anisotropic forms, which are definite in rank >= 5
        throw NumberError("no_zero_up_to_height: indefinite form of rank >= 5 is isotropic");
    }
    auto a = scale_to_int64(f, height);
    return !direct_search(a, height, true).has_value();
}

std::optional<std::vector<Rational>> representation_witness(const QuadraticForm& f,
                                                            const Rational& b, long max_height) {
    if (b == 0) throw NumberError("representation_witness: zero b");
    if (!represents(f, b)) return std::nullopt;
    int n = f.dimension();
    // fast path: some entry already has the right square class
    for (int i = 0; i < n; ++i) {
        const Rational& ai = f.entries()[static_cast<std::size_t>(i)];
        if (same_square_class(ai, b)) {
            Rational t = b / ai;  // a square
            Rational root(sqrt(numerator(t)), sqrt(denominator(t)));
            std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
            x[static_cast<std::size_t>(i)] = root;
            return x;
        }
    }
    QuadraticForm g = f.orthogonal_sum(QuadraticForm({-b}));
    auto w = isotropy_witness(g, max_height);
    if (!w) return std::nullopt;
    const Integer& z = (*w)[static_cast<std::size_t>(n)];
    if (z != 0) {
        std::vector<Rational> x;
        for (int i = 0; i < n; ++i) x.emplace_back(Rational((*w)[static_cast<std::size_t>(i)], z));
        return x;
    }
    // witness lies inside f: f is isotropic, hence universal; shift along
    // the isotropic vector: f(alpha v + u) = 2 alpha B(v,u) + f(u)
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) v.emplace_back((*w)[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i) {
        std::size_t ui = static_cast<std::size_t>(i);
        Rational bvu = f.entries()[ui] * v[ui];  // B(v, e_i)
        if (bvu == 0) continue;
        Rational fu = f.entries()[ui];  // f(e_i)
        Rational alpha = (b - fu) / (2 * bvu);
        std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
        for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = alpha * v[static_cast<std::size_t>(j)];
        x[ui] += 1;
        return x;
    }
    return std::nullopt;
}

}  // namespace toruslab
