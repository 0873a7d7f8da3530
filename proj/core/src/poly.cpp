#include "toruslab/poly.hpp"

#include <algorithm>
#include <map>

namespace toruslab {

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> out = c_;
    for (auto& x : out) x *= s;
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw NumberError("polynomial division by zero");
    std::vector<Rational> rem = c_;
    int dd = divisor.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<Rational> quot(degree() - dd + 1, Rational(0));
    for (int i = degree(); i >= dd; --i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (rem.size() <= ui || rem[ui] == 0) continue;
        Rational q = rem[ui] / divisor.leading();
        quot[ui - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[ui - dd + j] -= q * divisor.coeffs()[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(Integer(i));
    return Poly(std::move(out));
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = Rational(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

// ---- arithmetic mod a word-size prime -------------------------------------

using ModPoly = std::vector<long>;  // low degree first, entries in [0, p)

long mod_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return ((t % p) + p) % p;
}

void mp_trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    mp_trim(out);
    return out;
}

ModPoly mp_rem(ModPoly f, const ModPoly& g, long p) {
    long lead_inv = mod_inv(g.back(), p);
    mp_trim(f);
    while (f.size() >= g.size()) {
        long c = f.back() * lead_inv % p;
        std::size_t shift = f.size() - g.size();
        if (c != 0) {
            for (std::size_t j = 0; j < g.size(); ++j)
                f[shift + j] = ((f[shift + j] - c * g[j]) % p + p) % p;
        }
        f.pop_back();
        mp_trim(f);
    }
    return f;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = mod_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

ModPoly mp_powmod_x(long e, const ModPoly& f, long p) {
    // x^e mod f
    ModPoly result{1};
    ModPoly base{0, 1};
    base = mp_rem(base, f, p);
    while (e > 0) {
        if (e & 1) result = mp_rem(mp_mul(result, base, p), f, p);
        base = mp_rem(mp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

// Berlekamp factorization of a monic square-free polynomial mod p.
std::vector<ModPoly> berlekamp(const ModPoly& f, long p) {
    std::size_t n = f.size() - 1;
    if (n == 1) return {f};
    // Q[i] = x^{ip} mod f as a length-n row
    std::vector<std::vector<long>> q(n, std::vector<long>(n, 0));
    ModPoly xp = mp_powmod_x(p, f, p);
    ModPoly row{1};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < row.size(); ++j) q[i][j] = row[j];
        row = mp_rem(mp_mul(row, xp, p), f, p);
    }
    // kernel of (Q - I)^T
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = ((q[j][i] - (i == j ? 1 : 0)) % p + p) % p;
    std::vector<std::size_t> pivot_col;
    std::size_t rrow = 0;
    for (std::size_t col = 0; col < n && rrow < n; ++col) {
        std::size_t piv = rrow;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rrow]);
        long inv = mod_inv(m[rrow][col], p);
        for (auto& x : m[rrow]) x = x * inv % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rrow || m[r][col] == 0) continue;
            long fct = m[r][col];
            for (std::size_t c = 0; c < n; ++c)
                m[r][c] = ((m[r][c] - fct * m[rrow][c]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rrow;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<ModPoly> kernel;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        ModPoly v(n, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = (p - m[i][free_col]) % p;
        mp_trim(v);
        kernel.push_back(std::move(v));
    }
    std::size_t r = kernel.size();  // number of irreducible factors
    std::vector<ModPoly> factors{f};
    if (r == 1) return factors;
    for (const auto& v : kernel) {
        if (v.size() <= 1) continue;  // the constant vector splits nothing
        for (long c = 0; c < p && factors.size() < r; ++c) {
            ModPoly vc = v;
            if (vc.empty()) vc.push_back(0);
            vc[0] = ((vc[0] - c) % p + p) % p;
            mp_trim(vc);
            std::vector<ModPoly> next;
            for (auto& u : factors) {
                if (u.size() <= 2) {
                    next.push_back(std::move(u));
                    continue;
                }
                ModPoly g = mp_gcd(u, vc, p);
                if (g.size() > 1 && g.size() < u.size()) {
                    ModPoly rest = u;
                    // u / g, exact
                    ModPoly quot;
                    {
                        ModPoly num = u;
                        long linv = mod_inv(g.back(), p);
                        quot.assign(num.size() - g.size() + 1, 0);
                        for (int i = static_cast<int>(num.size()) - 1;
                             i >= static_cast<int>(g.size()) - 1; --i) {
                            long cc = num[i] * linv % p;
                            quot[i - (g.size() - 1)] = cc;
                            for (std::size_t j = 0; j < g.size(); ++j)
                                num[i - (g.size() - 1) + j] =
                                    ((num[i - (g.size() - 1) + j] - cc * g[j]) % p + p) % p;
                        }
                    }
                    next.push_back(std::move(g));
                    next.push_back(std::move(quot));
                } else {
                    next.push_back(std::move(u));
                }
            }
            factors = std::move(next);
        }
        if (factors.size() == r) break;
    }
    for (auto& u : factors) {
        long inv = mod_inv(u.back(), p);
        for (auto& c : u) c = c * inv % p;
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

// ---- arithmetic mod p^k with big coefficients ------------------------------

using ZPoly = std::vector<Integer>;

void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zp_reduce(ZPoly f, const Integer& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    zp_trim(f);
    return f;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return zp_reduce(std::move(out), m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return zp_reduce(std::move(out), m);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return zp_reduce(std::move(out), m);
}

Integer int_mod_inv(Integer a, const Integer& m) {
    Integer t = 0, nt = 1, r = m, nr = a % m;
    if (nr < 0) nr += m;
    while (nr != 0) {
        Integer q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    t %= m;
    if (t < 0) t += m;
    return t;
}

// divmod by a polynomial whose leading coefficient is a unit mod m
std::pair<ZPoly, ZPoly> zp_divmod(ZPoly f, const ZPoly& g, const Integer& m) {
    Integer linv = int_mod_inv(g.back(), m);
    if (f.size() < g.size()) return {{}, std::move(f)};
    ZPoly quot(f.size() - g.size() + 1, Integer(0));
    for (int i = static_cast<int>(f.size()) - 1; i >= static_cast<int>(g.size()) - 1; --i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (f[ui] == 0) continue;
        Integer c = f[ui] * linv % m;
        quot[ui - (g.size() - 1)] = c;
        for (std::size_t j = 0; j < g.size(); ++j) {
            std::size_t k = ui - (g.size() - 1) + j;
            f[k] = (f[k] - c * g[j]) % m;
            if (f[k] < 0) f[k] += m;
        }
    }
    zp_trim(f);
    zp_trim(quot);
    return {std::move(quot), std::move(f)};
}

// Quadratic Hensel: from f = g h (mod p) with s g + t h = 1 (mod p),
// lift to modulus >= target. f, g, h monic.
struct LiftedPair {
    ZPoly g, h;
};

LiftedPair hensel_pair(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t, const Integer& p,
                       const Integer& target) {
    Integer m = p;
    while (m < target) {
        Integer m2 = m * m;
        ZPoly e = zp_sub(zp_reduce(f, m2), zp_mul(g, h, m2), m2);
        auto [q, r] = zp_divmod(zp_mul(s, e, m2), h, m2);
        ZPoly g1 = zp_add(g, zp_add(zp_mul(t, e, m2), zp_mul(q, g, m2), m2), m2);
        ZPoly h1 = zp_add(h, r, m2);
        ZPoly b = zp_sub(zp_add(zp_mul(s, g1, m2), zp_mul(t, h1, m2), m2), ZPoly{Integer(1)}, m2);
        auto [c, d] = zp_divmod(zp_mul(s, b, m2), h1, m2);
        ZPoly s1 = zp_sub(s, d, m2);
        ZPoly t1 = zp_sub(t, zp_add(zp_mul(t, b, m2), zp_mul(c, g1, m2), m2), m2);
        g = std::move(g1);
        h = std::move(h1);
        s = std::move(s1);
        t = std::move(t1);
        m = m2;
    }
    return {zp_reduce(std::move(g), target), zp_reduce(std::move(h), target)};
}

ZPoly mp_to_zp(const ModPoly& f) {
    ZPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    return out;
}

// Extended gcd mod p for coprime g, h: s g + t h = 1.
std::pair<ModPoly, ModPoly> mp_ext_gcd(const ModPoly& g, const ModPoly& h, long p) {
    ModPoly r0 = g, r1 = h;
    ModPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        ModPoly q;
        {
            ModPoly num = r0;
            long linv = mod_inv(r1.back(), p);
            if (num.size() >= r1.size()) {
                q.assign(num.size() - r1.size() + 1, 0);
                for (int i = static_cast<int>(num.size()) - 1;
                     i >= static_cast<int>(r1.size()) - 1; --i) {
                    if (num[i] == 0) continue;
                    long c = num[i] * linv % p;
                    q[i - (r1.size() - 1)] = c;
                    for (std::size_t j = 0; j < r1.size(); ++j)
                        num[i - (r1.size() - 1) + j] =
                            ((num[i - (r1.size() - 1) + j] - c * r1[j]) % p + p) % p;
                }
                mp_trim(num);
            }
            r0 = std::exchange(r1, num);
        }
        auto upd = [&](ModPoly& a0, ModPoly& a1) {
            ModPoly qa = mp_mul(q, a1, p);
            ModPoly na(std::max(a0.size(), qa.size()), 0);
            for (std::size_t i = 0; i < a0.size(); ++i) na[i] = a0[i];
            for (std::size_t i = 0; i < qa.size(); ++i) na[i] = ((na[i] - qa[i]) % p + p) % p;
            mp_trim(na);
            a0 = std::exchange(a1, na);
        };
        upd(s0, s1);
        upd(t0, t1);
    }
    long inv = mod_inv(r0.back(), p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

// Lift the factorization f = prod(factors) (mod p) to modulus target.
// f and all factors monic.
std::vector<ZPoly> hensel_tree(const ZPoly& f, const std::vector<ModPoly>& factors, long p,
                               const Integer& target) {
    if (factors.size() == 1) return {zp_reduce(f, target)};
    std::size_t mid = factors.size() / 2;
    ModPoly g0{1}, h0{1};
    for (std::size_t i = 0; i < mid; ++i) g0 = mp_mul(g0, factors[i], p);
    for (std::size_t i = mid; i < factors.size(); ++i) h0 = mp_mul(h0, factors[i], p);
    auto [s, t] = mp_ext_gcd(g0, h0, p);
    auto pair = hensel_pair(f, mp_to_zp(g0), mp_to_zp(h0), mp_to_zp(s), mp_to_zp(t), Integer(p),
                            target);
    std::vector<ModPoly> left(factors.begin(), factors.begin() + mid);
    std::vector<ModPoly> right(factors.begin() + mid, factors.end());
    auto lifted_left = hensel_tree(pair.g, left, p, target);
    auto lifted_right = hensel_tree(pair.h, right, p, target);
    lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
    return lifted_left;
}

// ---- integer polynomial helpers --------------------------------------------

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division test for monic divisor over Z.
bool z_divides(const ZPoly& f, const ZPoly& g, ZPoly* quot_out) {
    if (f.size() < g.size()) return false;
    ZPoly rem = f;
    ZPoly quot(f.size() - g.size() + 1, Integer(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(g.size()) - 1; --i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (rem[ui] == 0) continue;
        Integer c = rem[ui];  // g monic
        quot[ui - (g.size() - 1)] = c;
        for (std::size_t j = 0; j < g.size(); ++j) rem[ui - (g.size() - 1) + j] -= c * g[j];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    if (quot_out) *quot_out = std::move(quot);
    return true;
}

ZPoly zp_symmetric(const ZPoly& f, const Integer& m) {
    ZPoly out = f;
    Integer half = m / 2;
    for (auto& c : out)
        if (c > half) c -= m;
    return out;
}

// Zassenhaus on a monic square-free integer polynomial; returns monic
// irreducible integer factors.
std::vector<ZPoly> factor_monic_squarefree_int(ZPoly f) {
    std::vector<ZPoly> out;
    if (f.size() <= 2) {
        if (f.size() == 2) out.push_back(f);
        return out;
    }
    // choose a prime keeping f square-free mod p
    long p = 0;
    for (long cand = 3; cand < 20000; cand += 2) {
        bool prime = true;
        for (long d = 3; d * d <= cand; d += 2)
            if (cand % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        ModPoly fp(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            Integer c = f[i] % cand;
            if (c < 0) c += cand;
            fp[i] = static_cast<long>(c);
        }
        mp_trim(fp);
        if (fp.size() != f.size()) continue;  // leading coefficient vanished (cannot happen: monic)
        ModPoly deriv(fp.size() - 1);
        for (std::size_t i = 1; i < fp.size(); ++i)
            deriv[i - 1] = static_cast<long>((Integer(fp[i]) * Integer(i)) % cand);
        mp_trim(deriv);
        if (deriv.empty()) continue;
        if (mp_gcd(fp, deriv, cand).size() == 1) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw NumberError("no good prime found for factorization");

    ModPoly fp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer c = f[i] % p;
        if (c < 0) c += p;
        fp[i] = static_cast<long>(c);
    }
    auto modular = berlekamp(fp, p);
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }

    // Landau-Mignotte style coefficient bound for monic factors
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) bound *= 2;
    Integer target = p;
    while (target <= 2 * bound) target *= p;

    auto lifted = hensel_tree(zp_reduce(f, target), modular, p, target);

    // subset recombination
    std::vector<std::size_t> live(lifted.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    ZPoly remaining = f;
    std::size_t take = 1;
    while (2 * take <= live.size()) {
        // iterate over size-`take` subsets of live in lexicographic order
        std::vector<std::size_t> idx(take);
        for (std::size_t i = 0; i < take; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            ZPoly cand{Integer(1)};
            for (auto i : idx) cand = zp_mul(cand, lifted[live[i]], target);
            cand = zp_symmetric(cand, target);
            ZPoly quot;
            if (z_divides(remaining, cand, &quot)) {
                out.push_back(cand);
                remaining = std::move(quot);
                std::vector<std::size_t> next_live;
                for (std::size_t i = 0, k = 0; i < live.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    next_live.push_back(live[i]);
                }
                live = std::move(next_live);
                found = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[pos] == live.size() - take + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t j = pos + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++take;
    }
    if (remaining.size() > 1) out.push_back(remaining);
    std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Poly zp_to_poly(const ZPoly& f) {
    std::vector<Rational> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rational(f[i]);
    return Poly(std::move(c));
}

// Factor a monic square-free rational polynomial.
std::vector<Poly> factor_squarefree(const Poly& f) {
    int n = f.degree();
    if (n <= 0) return {};
    if (n == 1) return {f.monic()};
    // scale to a monic integer polynomial: g(y) = D^n f(y/D) with y = D x
    Poly fm = f.monic();
    Integer den_lcm = 1;
    for (const auto& c : fm.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
    ZPoly g(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        Integer pw = 1;
        for (int t = 0; t < n - j; ++t) pw *= den_lcm;
        Rational scaled = fm.coeff(static_cast<std::size_t>(j)) * Rational(pw);
        if (denominator(scaled) != 1) throw NumberError("monicization failed");
        g[static_cast<std::size_t>(j)] = numerator(scaled);
    }
    auto int_factors = factor_monic_squarefree_int(g);
    std::vector<Poly> out;
    for (const auto& h : int_factors) {
        // map back: factor of f is h(D x) made monic
        Poly hp = zp_to_poly(h);
        std::vector<Rational>c(hp.coeffs());
        Integer pw = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] *= Rational(pw);
            pw *= den_lcm;
        }
        out.push_back(Poly(std::move(c)).monic());
    }
    return out;
}

}  // namespace

std::vector<PolyFactor> factor_rational(const Poly& f) {
    if (f.is_zero()) throw NumberError("factor_rational(0)");
    std::vector<PolyFactor> out;
    if (f.degree() == 0) return out;
    // the square-free part carries each irreducible exactly once
    Poly fm = f.monic();
    Poly g = poly_gcd(fm, fm.derivative());
    Poly sqfree = fm.divmod(g).first;
    for (const auto& irr : factor_squarefree(sqfree)) {
        int m = 0;
        Poly probe = fm;
        while (true) {
            auto [q, r] = probe.divmod(irr);
            if (!r.is_zero()) break;
            probe = q;
            ++m;
        }
        out.push_back({irr, m});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return out;
}

bool poly_is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    auto fs = factor_rational(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace toruslab
