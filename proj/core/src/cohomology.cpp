#include "toruslab/cohomology.hpp"

namespace toruslab {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// z as the pair of components of K = Q x Q (split case, w^2 = 1)
std::pair<Rational, Rational> split_components(const KElem& z) {
    return {z.a + z.b, z.a - z.b};
}

bool same_torus_data(const UnitaryTorus& a, const UnitaryTorus& b) {
    if (a.L().kind() != b.L().kind()) return false;
    if (!(a.K().alpha() == b.K().alpha())) return false;
    switch (a.L().kind()) {
        case CubicKind::SplitTriple: return true;
        case CubicKind::MixedPair: return a.L().alpha0() == b.L().alpha0();
        case CubicKind::Field: return a.L().min_poly() == b.L().min_poly();
    }
    return false;
}

void validate_pair(const UnitaryTorus& t, const Vec& s, const KElem& z) {
    if (s.size() != 3) throw AdmissibilityError("cocycle pair: s must have 3 coordinates");
    const auto& la = t.L().algebra();
    if (la.norm(s) == 0) throw AdmissibilityError("cocycle pair: s is not a unit");
    if (t.K().norm(z) == 0) throw AdmissibilityError("cocycle pair: z is not a unit");
    if (la.norm(s) != t.K().norm(z))
        throw AdmissibilityError("cocycle pair: N_{L/Q}(s) != z conj(z)");
}

// first place where <1,-alpha,-s0> fails to be locally isotropic
Place binary_obstruction(const Rational& alpha, const Rational& s0) {
    QuadraticForm f({Rational(1), -alpha, -s0});
    for (const auto& v : relevant_places(f)) {
        if (!locally_isotropic(f, v)) return v;
    }
    throw NumberError("binary_obstruction: no local obstruction found");
}

// deterministic odometer over integer boxes [-r, r]^n
bool next_tuple(std::vector<long>& tup, long r) {
    for (std::size_t i = 0; i < tup.size(); ++i) {
        if (tup[i] < r) {
            ++tup[i];
            for (std::size_t j = 0; j < i; ++j) tup[j] = -r;
            return true;
        }
    }
    return false;
}

// Bounded search for b in E with b tau(b) = s (an L-element) and, when
// `z` is set, N_{E/K}(b) = z. Coordinates b_i/d with |b_i| <= r, d <= D.
std::optional<Vec> box_search_E(const UnitaryAlgebra& ealg, const Vec& s,
                                const std::optional<KElem>& z, long r, long d_max) {
    const EtaleAlgebra& e = ealg.E();
    Vec s_emb = ealg.embed_L(s);
    for (long d = 1; d <= d_max; ++d) {
        Rational d2(static_cast<long>(d) * d), d3(static_cast<long>(d) * d * d);
        Vec target = e.scale(d2, s_emb);
        KElem ztarget;
        if (z) ztarget = KElem{z->a * d3, z->b * d3};
        std::vector<long> tup(6, -r);
        bool more = true;
        while (more) {
            Vec b(6);
            bool zero = true;
            for (std::size_t i = 0; i < 6; ++i) {
                b[i] = Rational(tup[i]);
                zero &= (tup[i] == 0);
            }
            if (!zero) {
                Vec prod = e.mul(b, ealg.tau(b));
                if (prod == target && (!z || ealg.norm_E_over_K(b) == ztarget)) {
                    Vec out(6);
                    for (std::size_t i = 0; i < 6; ++i) out[i] = b[i] / Rational(d);
                    return out;
                }
            }
            more = next_tuple(tup, r);
        }
    }
    return std::nullopt;
}

// Coefficients of the cubic norm form N(a e0 + b e1 + c e2) as the 10
// monomials a^3, a^2 b, a^2 c, a b^2, a b c, a c^2, b^3, b^2 c, b c^2, c^3.
// Fitted once by exact interpolation, then evaluated in int64.
std::array<long long, 10> norm_form_coefficients(const EtaleAlgebra& la) {
    static const long pts[10][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},
                                    {0, 1, 1}, {1, 1, 1}, {2, 1, 0}, {0, 2, 1}, {1, 0, 2}};
    Mat m = mat_zero(10, 10);
    Vec rhs(10);
    for (std::size_t row = 0; row < 10; ++row) {
        long a = pts[row][0], b = pts[row][1], c = pts[row][2];
        long mono[10] = {a * a * a, a * a * b, a * a * c, a * b * b, a * b * c,
                         a * c * c, b * b * b, b * b * c, b * c * c, c * c * c};
        for (std::size_t col = 0; col < 10; ++col) m[row][col] = Rational(mono[col]);
        rhs[row] = la.norm(Vec{Rational(a), Rational(b), Rational(c)});
    }
    auto sol = mat_solve(m, rhs);
    if (!sol) throw NumberError("norm_form_coefficients: interpolation failed");
    std::array<long long, 10> out{};
    for (std::size_t i = 0; i < 10; ++i) {
        if (denominator((*sol)[i]) != 1)
            throw NumberError("norm_form_coefficients: non-integral norm form");
        out[i] = static_cast<long long>(numerator((*sol)[i]));
    }
    return out;
}

long long eval_norm_form(const std::array<long long, 10>& cf, long long a, long long b,
                         long long c) {
    return cf[0] * a * a * a + cf[1] * a * a * b + cf[2] * a * a * c + cf[3] * a * b * b +
           cf[4] * a * b * c + cf[5] * a * c * c + cf[6] * b * b * b + cf[7] * b * b * c +
           cf[8] * b * c * c + cf[9] * c * c * c;
}

// Bounded search for l in L with N_{L/Q}(l) = target.
std::optional<Vec> box_search_L_norm(const EtaleAlgebra& la, const Rational& target, long r,
                                     long d_max) {
    auto cf = norm_form_coefficients(la);
    for (long d = 1; d <= d_max; ++d) {
        Rational want_q = target * Rational(static_cast<long>(d) * d * d);
        if (denominator(want_q) != 1) continue;  // integer points have integer norms
        Integer want_i = numerator(want_q);
        if (abs(want_i) > Integer(1) << 62) continue;
        long long want = static_cast<long long>(want_i);
        std::vector<long> tup(3, -r);
        bool more = true;
        while (more) {
            if ((tup[0] != 0 || tup[1] != 0 || tup[2] != 0) &&
                eval_norm_form(cf, tup[0], tup[1], tup[2]) == want) {
                Vec l{Rational(tup[0]), Rational(tup[1]), Rational(tup[2])};
                if (la.norm(l) == want_q) {  // exact confirmation
                    for (auto& c : l) c /= d;
                    return l;
                }
            }
            more = next_tuple(tup, r);
        }
    }
    return std::nullopt;
}

}  // namespace

CohomologyClass::CohomologyClass(std::shared_ptr<const UnitaryTorus> parent, Vec s, KElem z)
    : parent_(std::move(parent)), rep_{std::move(s), z} {
    validate_pair(*parent_, rep_.s, rep_.z);
}

CohomologyClass CohomologyClass::multiply(const CohomologyClass& o) const {
    if (parent_ != o.parent_ && !same_torus_data(*parent_, *o.parent_))
        throw AdmissibilityError("class product: parent torus mismatch");
    return CohomologyClass(parent_, parent_->L().algebra().mul(rep_.s, o.rep_.s),
                           parent_->K().mul(rep_.z, o.rep_.z));
}

CohomologyClass CohomologyClass::inverse() const {
    auto s_inv = parent_->L().algebra().inverse(rep_.s);
    auto z_inv = parent_->K().inverse(rep_.z);
    return CohomologyClass(parent_, *s_inv, *z_inv);
}

bool CohomologyClass::is_identity_representative() const {
    return rep_.s == parent_->L().algebra().unit() && rep_.z == parent_->K().one();
}

CohomologyClass make_class(std::shared_ptr<const UnitaryTorus> t, const Vec& s, const KElem& z) {
    return CohomologyClass(std::move(t), s, z);
}

bool verify_twist_witness(const UnitaryTorus& t, const CocyclePair& from, const CocyclePair& to,
                          const Vec& b) {
    const auto& ealg = t.ealg();
    const auto& e = ealg.E();
    Vec lhs = e.mul(e.mul(ealg.embed_L(from.s), b), ealg.tau(b));
    if (!(lhs == ealg.embed_L(to.s))) return false;
    KElem nb = ealg.norm_E_over_K(b);
    return t.K().mul(nb, from.z) == to.z;
}

bool verify_trivial_witness(const UnitaryTorus& t, const CocyclePair& pair, const Vec& b) {
    const auto& ealg = t.ealg();
    const auto& e = ealg.E();
    if (!(e.mul(b, ealg.tau(b)) == ealg.embed_L(pair.s))) return false;
    return ealg.norm_E_over_K(b) == pair.z;
}

CocyclePair twist(const UnitaryTorus& t, const CocyclePair& pair, const Vec& b) {
    const auto& ealg = t.ealg();
    const auto& e = ealg.E();
    Vec s_new_e = e.mul(e.mul(b, ealg.embed_L(pair.s)), ealg.tau(b));
    auto [l_part, w_part] = ealg.parts(s_new_e);
    for (const auto& c : w_part)
        if (c != 0) throw NumberError("twist: image left L");
    KElem z_new = t.K().mul(ealg.norm_E_over_K(b), pair.z);
    return CocyclePair{l_part, z_new};
}

H1Decomposition decompose(const CohomologyClass& c) {
    const auto& k = c.torus().K();
    const KElem& mu = c.representative().z;
    KElem mu_inv = *k.inverse(mu);
    return H1Decomposition{k.mul(mu_inv, k.conj(mu)), c.representative().s};
}

CocyclePair psi_section(const UnitaryTorus& t, const Vec& u, const KElem& mu) {
    const auto& k = t.K();
    if (t.L().algebra().norm(u) != k.norm(mu))
        throw AdmissibilityError("psi_section: mu does not match N_{L/Q}(u)");
    KElem z = k.mul(k.mul(mu, mu), *k.inverse(k.conj(mu)));
    return CocyclePair{u, z};
}

// ---- the mixed-pair K0-block norm question ----------------------------------

namespace {

// Is x0 in N_{M/K0}(M*), M = K0 (x) K, for a quadratic field K and
// quadratic field K0 (alpha0 != alpha classes handled by callers)?
// Decidable for rational x0 through the quaternion splitting criterion.
VerdictReport norm_M_member(const UnitaryAlgebra& ealg, const KElem& x0,
                            const SearchBudget& budget) {
    VerdictReport rep;
    const QuadraticEtale& k = ealg.K();
    Rational alpha = k.alpha();
    Rational alpha0 = ealg.L().alpha0();
    QuadraticEtale k0(alpha0);
    const EtaleAlgebra& e = ealg.E();

    // the M-block of E sits on coordinates 2..5 (basis u1, u2 tensored)
    auto embed_M_k0 = [&](const KElem& v) {
        Vec x = e.zero();
        x[2] = v.a;
        x[4] = v.b;
        return x;
    };
    auto m_norm_is = [&](const Vec& y, const KElem& v) {
        // y supported on the M-block; N_{M/K0}(y) = y tau(y) read back in K0
        Vec prod = e.mul(y, ealg.tau(y));
        return prod == embed_M_k0(v);
    };

    if (same_square_class(alpha, alpha0)) {
        // M splits as K0 x K0: y = x0 e+ + e- has norm x0
        Rational a = alpha;  // both classes share the square-free representative
        Vec y = e.zero();
        y[2] = (x0.a + 1) / 2;
        y[4] = x0.b / 2;
        y[3] = x0.b / 2;
        y[5] = (x0.a - 1) / (2 * a);
        if (!m_norm_is(y, x0)) throw NumberError("norm_M_member: split-M witness failed");
        rep.verdict = Verdict::True;
        rep.witness = y;
        return rep;
    }

    // rationalize the coset when possible: x0 * N(m) rational for a small m
    KElem x0_work = x0;
    std::optional<Vec> rationalizer;
    if (x0_work.b != 0) {
        // candidates m in the M-block with small coordinates
        std::vector<long> tup(4, -2);
        bool more = true;
        while (more && x0_work.b != 0) {
            Vec m = e.zero();
            m[2] = Rational(tup[0]);
            m[3] = Rational(tup[1]);
            m[4] = Rational(tup[2]);
            m[5] = Rational(tup[3]);
            Vec prod = e.mul(m, ealg.tau(m));
            // prod = N_{M/K0}(m) embedded; read K0 coordinates
            KElem nm{prod[2], prod[4]};
            if (!(nm.a == 0 && nm.b == 0)) {
                KElem scaled = k0.mul(x0, nm);
                if (scaled.b == 0 && scaled.a != 0) {
                    x0_work = scaled;
                    rationalizer = m;
                }
            }
            more = next_tuple(tup, 2);
        }
    }

    if (x0_work.b == 0) {
        // rational representative q: q in N_{M/K0}(M*) iff the quaternion
        // algebra (alpha, q) splits over K0
        Rational q = x0_work.a;
        PfisterForm quat({alpha, q});
        bool splits = is_hyperbolic(quat.expansion()) || pfister_divides_1fold(alpha0, quat);
        rep.verdict = splits ? Verdict::True : Verdict::False;
        if (!splits && is_isotropic(QuadraticForm({Rational(1), -alpha, -q})) == false) {
            // record a concrete place obstructing q over Q when there is one
            QuadraticForm f({Rational(1), -alpha, -q});
            for (const auto& v : relevant_places(f))
                if (!locally_isotropic(f, v)) {
                    rep.obstruction = v;
                    break;
                }
        }
        return rep;
    }

    // bounded witness search on the M-block
    long r = budget.radius6() + 1;
    for (long d = 1; d <= budget.denom(); ++d) {
        KElem want{x0.a * d * d, x0.b * d * d};
        std::vector<long> tup(4, -r);
        bool more = true;
        while (more) {
            if (tup[0] != 0 || tup[1] != 0 || tup[2] != 0 || tup[3] != 0) {
                Vec y = e.zero();
                y[2] = Rational(tup[0]);
                y[3] = Rational(tup[1]);
                y[4] = Rational(tup[2]);
                y[5] = Rational(tup[3]);
                if (m_norm_is(y, want)) {
                    for (auto& c : y) c /= d;
                    rep.verdict = Verdict::True;
                    rep.witness = y;
                    return rep;
                }
            }
            more = next_tuple(tup, r);
        }
    }
    (void)rationalizer;
    rep.verdict = Verdict::Unknown;
    return rep;
}

}  // namespace

VerdictReport is_trivial(const CohomologyClass& c, const SearchBudget& budget) {
    const UnitaryTorus& t = c.torus();
    const UnitaryAlgebra& ealg = t.ealg();
    const EtaleAlgebra& e = ealg.E();
    const auto& la = t.L().algebra();
    const CocyclePair& pair = c.representative();
    VerdictReport rep;

    if (c.is_identity_representative()) {
        rep.verdict = Verdict::True;
        rep.witness = e.unit();
        return rep;
    }

    bool k_split = t.K().split();
    switch (t.L().kind()) {
        case CubicKind::SplitTriple: {
            if (k_split) {
                // always trivial: u = (z1, 1, 1), v = s u^{-1}
                auto [z1, z2] = split_components(pair.z);
                Vec u{z1, Rational(1), Rational(1)};
                Vec v = la.mul(pair.s, *la.inverse(u));
                Vec b = ealg.from_switch_pair(u, v);
                if (!verify_trivial_witness(t, pair, b))
                    throw NumberError("is_trivial: split witness failed");
                rep.verdict = Verdict::True;
                rep.witness = b;
                (void)z2;
                return rep;
            }
            // field K: trivial iff every s_i is a K/Q-norm
            Rational alpha = t.K().alpha();
            for (std::size_t i = 0; i < 3; ++i) {
                if (!represents(QuadraticForm({Rational(1), -alpha}), pair.s[i])) {
                    rep.verdict = Verdict::False;
                    rep.obstruction = binary_obstruction(alpha, pair.s[i]);
                    return rep;
                }
            }
            rep.verdict = Verdict::True;
            // assemble a witness when representation witnesses are in reach
            std::array<KElem, 3> bc;
            bool have = true;
            for (std::size_t i = 0; i < 3; ++i) {
                auto w = representation_witness(QuadraticForm({Rational(1), -alpha}), pair.s[i],
                                                budget.height);
                if (!w) {
                    have = false;
                    break;
                }
                bc[i] = KElem{(*w)[0], (*w)[1]};
            }
            if (have) {
                // fix the z-slack by a norm-one factor on the first coordinate
                KElem prod = t.K().mul(t.K().mul(bc[0], bc[1]), bc[2]);
                KElem w = t.K().mul(pair.z, *t.K().inverse(prod));
                bc[0] = t.K().mul(bc[0], w);
                Vec b = ealg.from_k_components(bc);
                if (verify_trivial_witness(t, pair, b)) rep.witness = b;
            }
            return rep;
        }
        case CubicKind::MixedPair: {
            if (k_split) {
                auto [z1, z2] = split_components(pair.z);
                Vec u{z1, Rational(1), Rational(0)};  // (z1, 1) in Q x K0
                Vec v = la.mul(pair.s, *la.inverse(u));
                Vec b = ealg.from_switch_pair(u, v);
                if (!verify_trivial_witness(t, pair, b))
                    throw NumberError("is_trivial: mixed split witness failed");
                rep.verdict = Verdict::True;
                rep.witness = b;
                (void)z2;
                return rep;
            }
            Rational alpha = t.K().alpha();
            Rational s0 = pair.s[0];
            KElem x0{pair.s[1], pair.s[2]};
            bool s0_norm = represents(QuadraticForm({Rational(1), -alpha}), s0);
            if (!s0_norm) {
                rep.verdict = Verdict::False;
                rep.obstruction = binary_obstruction(alpha, s0);
                return rep;
            }
            VerdictReport m_part = norm_M_member(ealg, x0, budget);
            if (m_part.verdict == Verdict::False) {
                rep.verdict = Verdict::False;
                rep.obstruction = m_part.obstruction;
                return rep;
            }
            if (m_part.verdict == Verdict::Unknown) {
                rep.verdict = Verdict::Unknown;
                return rep;
            }
            rep.verdict = Verdict::True;
            auto w0 = representation_witness(QuadraticForm({Rational(1), -alpha}), s0,
                                             budget.height);
            if (w0 && m_part.witness) {
                Vec b = *m_part.witness;  // M-block part
                b[0] = (*w0)[0];
                b[1] = (*w0)[1];
                // fix the z-slack on the K-block coordinate
                KElem nb = ealg.norm_E_over_K(b);
                KElem w = t.K().mul(pair.z, *t.K().inverse(nb));
                KElem b0 = t.K().mul(KElem{b[0], b[1]}, w);
                b[0] = b0.a;
                b[1] = b0.b;
                if (verify_trivial_witness(t, pair, b)) rep.witness = b;
            }
            return rep;
        }
        case CubicKind::Field: {
            if (k_split) {
                // trivial iff z1 is a norm from the cubic field
                auto [z1, z2] = split_components(pair.z);
                auto l = box_search_L_norm(la, z1, budget.radius3(), budget.denom());
                if (l) {
                    Vec v = la.mul(pair.s, *la.inverse(*l));
                    Vec b = ealg.from_switch_pair(*l, v);
                    if (!verify_trivial_witness(t, pair, b))
                        throw NumberError("is_trivial: cubic split witness failed");
                    rep.verdict = Verdict::True;
                    rep.witness = b;
                    return rep;
                }
                (void)z2;
                rep.verdict = Verdict::Unknown;  // cubic norm groups are out of
                                                 // reach of the mod-2 machinery
                return rep;
            }
            auto b = box_search_E(ealg, pair.s, pair.z, budget.radius6(), budget.denom());
            if (b) {
                rep.verdict = Verdict::True;
                rep.witness = b;
                return rep;
            }
            rep.verdict = Verdict::Unknown;
            return rep;
        }
    }
    return rep;
}

std::optional<Vec> solve_norm_E_over_K(const UnitaryAlgebra& ealg, const KElem& mu,
                                       const SearchBudget& budget) {
    const EtaleAlgebra& e = ealg.E();
    if (ealg.K().norm(mu) == 0) return std::nullopt;
    Vec b;
    switch (ealg.L().kind()) {
        case CubicKind::SplitTriple:
            b = ealg.from_k_components({mu, ealg.K().one(), ealg.K().one()});
            break;
        case CubicKind::MixedPair:
            b = e.zero();
            b[0] = mu.a;
            b[1] = mu.b;
            b[2] = 1;
            break;
        case CubicKind::Field: {
            // scalar cube shortcut, then bounded search
            if (mu.b == 0) {
                Integer n = numerator(mu.a), d = denominator(mu.a);
                auto cbrt = [](const Integer& v) -> std::optional<Integer> {
                    if (v < 0) {
                        Integer w = -v;
                        for (Integer c = 0; c * c * c <= w; ++c)
                            if (c * c * c == w) return -c;
                        return std::nullopt;
                    }
                    for (Integer c = 0; c * c * c <= v; ++c)
                        if (c * c * c == v) return c;
                    return std::nullopt;
                };
                auto cn = cbrt(n), cd = cbrt(d);
                if (cn && cd) {
                    b = e.scale(Rational(*cn, *cd), e.unit());
                    break;
                }
            }
            // search over the E-box for N_{E/K}(b) = mu
            long r = budget.radius6();
            for (long d = 1; d <= budget.denom(); ++d) {
                KElem want{mu.a * d * d * d, mu.b * d * d * d};
                std::vector<long> tup(6, -r);
                bool more = true;
                while (more) {
                    bool zero = true;
                    Vec cand(6);
                    for (std::size_t i = 0; i < 6; ++i) {
                        cand[i] = Rational(tup[i]);
                        zero &= tup[i] == 0;
                    }
                    if (!zero && ealg.norm_E_over_K(cand) == want) {
                        for (auto& c : cand) c /= d;
                        return cand;
                    }
                    more = next_tuple(tup, r);
                }
            }
            return std::nullopt;
        }
    }
    if (!(ealg.norm_E_over_K(b) == mu)) throw NumberError("solve_norm_E_over_K: bad witness");
    return b;
}

namespace {

bool verify_norm_E_over_L(const UnitaryAlgebra& ealg, const Vec& b, const Vec& u) {
    return ealg.E().mul(b, ealg.tau(b)) == ealg.embed_L(u);
}

}  // namespace

VerdictReport norm_E_over_L_member(const UnitaryAlgebra& ealg, const Vec& u,
                                   const SearchBudget& budget) {
    VerdictReport rep;
    const QuadraticEtale& k = ealg.K();
    Rational alpha = k.alpha();
    switch (ealg.L().kind()) {
        case CubicKind::SplitTriple: {
            std::array<KElem, 3> bc;
            for (std::size_t i = 0; i < 3; ++i) {
                if (u[i] == 0) throw NumberError("norm_E_over_L_member: u is not a unit");
                if (k.split()) {
                    // norms of Q x Q cover all of Q*
                    bc[i] = KElem{(u[i] + 1) / 2, (u[i] - 1) / 2};
                    continue;
                }
                if (!represents(QuadraticForm({Rational(1), -alpha}), u[i])) {
                    rep.verdict = Verdict::False;
                    rep.obstruction = binary_obstruction(alpha, u[i]);
                    return rep;
                }
                auto w = representation_witness(QuadraticForm({Rational(1), -alpha}), u[i],
                                                budget.height);
                if (w) bc[i] = KElem{(*w)[0], (*w)[1]};
            }
            rep.verdict = Verdict::True;
            Vec b = ealg.from_k_components(bc);
            if (verify_norm_E_over_L(ealg, b, u)) rep.witness = b;
            return rep;
        }
        case CubicKind::MixedPair: {
            Rational u0 = u[0];
            KElem x0{u[1], u[2]};
            if (k.split()) {
                rep.verdict = Verdict::True;
                Vec b = ealg.from_switch_pair(u, Vec{Rational(1), Rational(1), Rational(0)});
                if (verify_norm_E_over_L(ealg, b, u)) rep.witness = b;
                return rep;
            }
            if (!represents(QuadraticForm({Rational(1), -alpha}), u0)) {
                rep.verdict = Verdict::False;
                rep.obstruction = binary_obstruction(alpha, u0);
                return rep;
            }
            VerdictReport m_part = norm_M_member(ealg, x0, budget);
            if (m_part.verdict != Verdict::True) return m_part;
            rep.verdict = Verdict::True;
            auto w0 = representation_witness(QuadraticForm({Rational(1), -alpha}), u0,
                                             budget.height);
            if (w0 && m_part.witness) {
                Vec b = *m_part.witness;
                b[0] = (*w0)[0];
                b[1] = (*w0)[1];
                if (verify_norm_E_over_L(ealg, b, u)) rep.witness = b;
            }
            return rep;
        }
        case CubicKind::Field: {
            auto b = box_search_E(ealg, u, std::nullopt, budget.radius6(), budget.denom());
            if (b) {
                rep.verdict = Verdict::True;
                rep.witness = b;
            } else {
                rep.verdict = Verdict::Unknown;
            }
            return rep;
        }
    }
    return rep;
}

H1Description h1_description(const UnitaryTorus& t) {
    H1Description d;
    TorusShape shape = t.classify();
    d.shape = shape.str();
    switch (shape.tag) {
        case TorusShapeTag::SplitRank2:
        case TorusShapeTag::WeilRestriction:
            d.group = "1";
            d.trivial = Verdict::True;
            return d;
        case TorusShapeTag::NormOneSquare: {
            d.group = "(Q*/N_{K/Q}(K*))^2";
            // a quadratic field norm form misses small values; certify
            Rational alpha = t.K().alpha();
            const long pool[] = {-1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11, 13, -13, 17, -17,
                                 19, -19, 23, -23, 29, -29, 31, -31, 37, -37, 41, -41};
            for (long q : pool) {
                if (same_square_class(Rational(q), Rational(1))) continue;
                if (!represents(QuadraticForm({Rational(1), -alpha}), Rational(q))) {
                    d.trivial = Verdict::False;
                    d.nontrivial_class =
                        CocyclePair{Vec{Rational(q), Rational(q), Rational(1)},
                                    KElem{Rational(q), Rational(0)}};
                    d.obstruction = binary_obstruction(alpha, Rational(q));
                    return d;
                }
            }
            d.trivial = Verdict::Unknown;
            return d;
        }
        case TorusShapeTag::General: {
            if (t.L().kind() == CubicKind::MixedPair) {
                d.group = "K0*/N_{K (x) K0 / K0}((K (x) K0)*)";
                // certified nontrivial when a rational q escapes the norms
                Rational alpha = t.K().alpha();
                Rational alpha0 = t.L().alpha0();
                const long pool[] = {-1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11, 13, -13};
                for (long q : pool) {
                    PfisterForm quat({alpha, Rational(q)});
                    bool splits =
                        is_hyperbolic(quat.expansion()) || pfister_divides_1fold(alpha0, quat);
                    if (!splits) {
                        d.trivial = Verdict::False;
                        d.nontrivial_class =
                            CocyclePair{Vec{Rational(1), Rational(q), Rational(0)},
                                        KElem{Rational(q), Rational(0)}};
                        return d;
                    }
                }
                d.trivial = Verdict::Unknown;
                return d;
            }
            if (t.K().split()) {
                d.group = "Q*/N_{L/Q}(L*)";
                d.trivial = Verdict::Unknown;  // cubic norm groups: no mod-2 certificate
                return d;
            }
            d.group = "K^(1)/N_{E/K}(U(E,tau)) x S/N_{E/L}(E*)";
            d.trivial = Verdict::Unknown;
            return d;
        }
    }
    return d;
}

std::string h1_full_unitary_group(const UnitaryTorus& t) {
    (void)t;
    return "L*/N_{E/L}(E*)";
}

}  // namespace toruslab
