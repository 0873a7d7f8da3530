#include "toruslab/jordan.hpp"

namespace toruslab {

namespace {

void validate_admissible(const UnitaryTorus& t, const Vec& u, const KElem& mu) {
    if (u.size() != 3) throw AdmissibilityError("admissible pair: u must have 3 coordinates");
    const auto& la = t.L().algebra();
    if (la.norm(u) == 0) throw AdmissibilityError("admissible pair: u is not a unit");
    if (t.K().norm(mu) == 0) throw AdmissibilityError("admissible pair: mu is not a unit");
    if (la.norm(u) != t.K().norm(mu))
        throw AdmissibilityError("admissible pair: N_{L/Q}(u) != N_{K/Q}(mu)");
}

bool same_pair_base(const UnitaryTorus& a, const UnitaryTorus& b) {
    if (a.L().kind() != b.L().kind()) return false;
    if (!(a.K().alpha() == b.K().alpha())) return false;
    switch (a.L().kind()) {
        case CubicKind::SplitTriple: return true;
        case CubicKind::MixedPair: return a.L().alpha0() == b.L().alpha0();
        case CubicKind::Field: return a.L().min_poly() == b.L().min_poly();
    }
    return false;
}

}  // namespace

TitsProcessAlgebra::TitsProcessAlgebra(std::shared_ptr<const UnitaryTorus> torus,
                                       AdmissiblePair pair)
    : torus_(std::move(torus)), pair_(std::move(pair)) {
    validate_admissible(*torus_, pair_.u, pair_.mu);
}

TitsProcessAlgebra make_tits(std::shared_ptr<const UnitaryTorus> torus, const Vec& u,
                             const KElem& mu) {
    return TitsProcessAlgebra(std::move(torus), AdmissiblePair{u, mu});
}

TitsElement TitsProcessAlgebra::identity() const {
    return TitsElement{torus_->L().algebra().unit(), torus_->ealg().E().zero()};
}

bool TitsProcessAlgebra::is_zero(const TitsElement& v) const {
    for (const auto& c : v.a)
        if (c != 0) return false;
    for (const auto& c : v.x)
        if (c != 0) return false;
    return true;
}

Rational TitsProcessAlgebra::cubic_norm(const TitsElement& v) const {
    const UnitaryAlgebra& ealg = torus_->ealg();
    const EtaleAlgebra& e = ealg.E();
    const EtaleAlgebra& la = torus_->L().algebra();
    const QuadraticEtale& k = torus_->K();

    Rational term1 = la.norm(v.a);
    KElem nx = ealg.norm_E_over_K(v.x);
    Rational term2 = k.trace(k.mul(pair_.mu, nx));
    // x u tau(x) is tau-fixed, hence an L-element
    Vec xutx = e.mul(e.mul(v.x, ealg.embed_L(pair_.u)), ealg.tau(v.x));
    auto [l_part, w_part] = ealg.parts(xutx);
    for (const auto& c : w_part)
        if (c != 0) throw NumberError("cubic_norm: x u tau(x) is not tau-fixed");
    Rational term3 = la.trace(la.mul(v.a, l_part));
    return term1 + term2 - term3;
}

IsotopeResult isotope_map(const TitsProcessAlgebra& j, const Vec& w) {
    const UnitaryAlgebra& ealg = j.torus().ealg();
    const EtaleAlgebra& e = ealg.E();
    if (!e.is_unit(w)) throw NumberError("isotope_map: w is not invertible");
    Vec wutw = e.mul(e.mul(w, ealg.embed_L(j.pair().u)), ealg.tau(w));
    auto [u_new, skew] = ealg.parts(wutw);
    for (const auto& c : skew)
        if (c != 0) throw NumberError("isotope_map: w u tau(w) left L");
    KElem mu_new = j.torus().K().mul(j.pair().mu, ealg.norm_E_over_K(w));
    return IsotopeResult{TitsProcessAlgebra(j.torus_ptr(), AdmissiblePair{u_new, mu_new}), w};
}

TitsElement IsotopeResult::map(const TitsProcessAlgebra& src, const TitsElement& v) const {
    const EtaleAlgebra& e = src.torus().ealg().E();
    Vec w_inv = *e.inverse(w);
    return TitsElement{v.a, e.mul(v.x, w_inv)};
}

ZeroDivisorReport find_zero_divisor(const TitsProcessAlgebra& j, const SearchBudget& budget) {
    ZeroDivisorReport rep;
    const UnitaryAlgebra& ealg = j.torus().ealg();
    const EtaleAlgebra& e = ealg.E();
    const QuadraticEtale& k = j.torus().K();

    // skew element 1 (x) w with tau-eigenvalue -1
    Vec skew = ealg.embed_K(KElem{Rational(0), Rational(1)});

    KElem mu_inv = *k.inverse(j.pair().mu);
    auto w = solve_norm_E_over_K(ealg, mu_inv, budget);
    if (!w) return rep;  // unknown: no certificate that mu is an E/K-norm

    // J = J(u, mu) maps onto J(w u tau(w), mu N(w)) = J(v, 1) by (a,x) -> (a, x w^{-1});
    // (0, skew) is a norm-zero element of J(v, 1); pull it back through the
    // inverse map (a, y) -> (a, y w)
    TitsElement zd{j.torus().L().algebra().zero(), e.mul(skew, *w)};
    if (j.is_zero(zd)) throw NumberError("find_zero_divisor: degenerate skew element");
    if (j.cubic_norm(zd) != 0) throw NumberError("find_zero_divisor: element has nonzero norm");
    rep.verdict = Verdict::True;
    rep.element = zd;
    return rep;
}

LIsomReport l_isomorphic(const TitsProcessAlgebra& j1, const TitsProcessAlgebra& j2,
                         const SearchBudget& budget) {
    if (!same_pair_base(j1.torus(), j2.torus()))
        throw AdmissibilityError("l_isomorphic: the algebras live over different (L, K)");
    LIsomReport rep;
    const UnitaryTorus& t = j1.torus();
    const auto& la = t.L().algebra();
    const QuadraticEtale& k = t.K();

    const Vec& u = j1.pair().u;
    const KElem& mu = j1.pair().mu;
    bool all_false = true;
    for (const auto& phi : t.L().automorphisms()) {
        // phi^{-1}(v)
        auto phi_inv = mat_inverse(phi);
        if (!phi_inv) throw NumberError("l_isomorphic: singular automorphism");
        Vec v_pull = mat_apply(*phi_inv, j2.pair().u);
        for (bool conj_choice : {false, true}) {
            KElem nu = conj_choice ? k.conj(j2.pair().mu) : j2.pair().mu;
            // branch question: (u / phi^{-1}(v), mu / nu) trivial in H^1?
            Vec s_ratio = la.mul(u, *la.inverse(v_pull));
            KElem z_ratio = k.mul(mu, *k.inverse(nu));
            auto cls = make_class(j1.torus_ptr(), s_ratio, z_ratio);
            auto verdict = is_trivial(cls, budget);
            if (verdict.verdict == Verdict::True) {
                rep.verdict = Verdict::True;
                rep.automorphism = phi;
                rep.witness = verdict.witness;
                rep.conjugated = conj_choice;
                return rep;
            }
            if (verdict.verdict != Verdict::False) all_false = false;
        }
    }
    rep.verdict = all_false ? Verdict::False : Verdict::Unknown;
    return rep;
}

std::vector<AdmissiblePair> sample_admissible_pairs(const std::shared_ptr<const UnitaryTorus>& t,
                                                    Rng& rng, int count) {
    std::vector<AdmissiblePair> out;
    const UnitaryAlgebra& ealg = t->ealg();
    const EtaleAlgebra& e = ealg.E();
    const auto& la = t->L().algebra();
    const QuadraticEtale& k = t->K();
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard++ < count * 60) {
        if (rng.coin()) {
            // twist of (1, 1): (b tau(b), N_{E/K}(b))
            Vec b = rng.small_vector(6, 3, 2);
            if (!e.is_unit(b)) continue;
            Vec u = ealg.norm_E_over_L(b);
            out.push_back(AdmissiblePair{u, ealg.norm_E_over_K(b)});
            continue;
        }
        // fresh pair: u random, mu solving N_K(mu) = N_L(u)
        Vec u = rng.small_vector(3, 4, 2);
        if (la.norm(u) == 0) continue;
        Rational n = la.norm(u);
        if (k.split()) {
            // components (z1, z2) with z1 z2 = n; take z1 = 1
            out.push_back(AdmissiblePair{u, KElem{(1 + n) / 2, (n - 1) / 2}});
            continue;
        }
        auto wit = representation_witness(QuadraticForm({Rational(1), -k.alpha()}), n, 2000);
        if (!wit) continue;
        out.push_back(AdmissiblePair{u, KElem{(*wit)[0], (*wit)[1]}});
    }
    return out;
}

HarnessReport titsisom_harness(const std::shared_ptr<const UnitaryTorus>& t, Rng& rng, int count,
                               const SearchBudget& budget) {
    HarnessReport rep;
    auto desc = h1_description(*t);
    rep.h1_group = desc.group;
    rep.h1_trivial = desc.trivial;

    TitsProcessAlgebra unit_alg =
        make_tits(t, t->L().algebra().unit(), t->K().one());

    auto pairs = sample_admissible_pairs(t, rng, count);
    rep.sampled = static_cast<int>(pairs.size());
    for (const auto& p : pairs) {
        TitsProcessAlgebra j = make_tits(t, p.u, p.mu);
        auto li = l_isomorphic(j, unit_alg, budget);
        switch (li.verdict) {
            case Verdict::True: ++rep.isomorphic_to_unit; break;
            case Verdict::False: ++rep.non_isomorphic; break;
            case Verdict::Unknown: ++rep.unknown; break;
        }
    }
    if (desc.trivial == Verdict::True) {
        // every sampled pair must be isomorphic to J(E,tau,1,1)
        rep.consistent = (rep.isomorphic_to_unit == rep.sampled);
    } else if (desc.trivial == Verdict::False && desc.nontrivial_class) {
        TitsProcessAlgebra j = make_tits(t, desc.nontrivial_class->s, desc.nontrivial_class->z);
        auto li = l_isomorphic(j, unit_alg, budget);
        rep.consistent = (li.verdict == Verdict::False);
        if (li.verdict == Verdict::False) ++rep.non_isomorphic;
    }
    return rep;
}

}  // namespace toruslab
