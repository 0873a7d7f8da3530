#include "toruslab/torus.hpp"

#include <map>

namespace toruslab {

std::string TorusShape::str() const {
    switch (tag) {
        case TorusShapeTag::SplitRank2: return "split-rank-2";
        case TorusShapeTag::WeilRestriction:
            return "weil-restriction(" + rational_str(*field_alpha) + ")";
        case TorusShapeTag::NormOneSquare:
            return "norm-one-square(" + rational_str(*field_alpha) + ")";
        case TorusShapeTag::General: return "general";
    }
    return "?";
}

UnitaryTorus::UnitaryTorus(CubicEtale l, QuadraticEtale k)
    : ealg_(std::move(l), std::move(k)) {}

QuadraticForm UnitaryTorus::q_t() const {
    Rational ad = Rational(alpha().representative()) * Rational(delta().representative());
    return QuadraticForm({Rational(1), -ad});
}

bool UnitaryTorus::is_distinguished() const { return (alpha() * delta()).is_trivial(); }

TorusShape UnitaryTorus::classify() const {
    TorusShape s;
    bool k_split = K().split();
    switch (L().kind()) {
        case CubicKind::SplitTriple:
            if (k_split) {
                s.tag = TorusShapeTag::SplitRank2;
            } else {
                s.tag = TorusShapeTag::NormOneSquare;
                s.field_alpha = K().alpha();
            }
            break;
        case CubicKind::MixedPair:
            if (k_split) {
                s.tag = TorusShapeTag::WeilRestriction;
                s.field_alpha = L().alpha0();
            } else if (same_square_class(K().alpha(), L().alpha0())) {
                s.tag = TorusShapeTag::WeilRestriction;
                s.field_alpha = K().alpha();
            } else {
                s.tag = TorusShapeTag::General;  // no closed form implemented
            }
            break;
        case CubicKind::Field:
            s.tag = TorusShapeTag::General;
            break;
    }
    return s;
}

bool UnitaryTorus::is_point(const Vec& x) const {
    const auto& e = ealg_.E();
    if (!(e.mul(x, ealg_.tau(x)) == e.unit())) return false;
    KElem n = ealg_.norm_E_over_K(x);
    return n == K().one();
}

namespace {

KElem rnd_k_unit(const QuadraticEtale& k, Rng& rng) {
    while (true) {
        KElem z{rng.small_rational(6, 2), rng.small_rational(6, 2)};
        if (k.norm(z) != 0) return z;
    }
}

Vec rnd_l_unit(const EtaleAlgebra& la, Rng& rng) {
    while (true) {
        Vec u = rng.small_vector(3, 6, 2);
        if (la.norm(u) != 0) return u;
    }
}

// ---- the three closed-form parameterizations --------------------------------

// SplitRank2: (a, b) in Q* x Q* -> ((a, b, 1/(ab)), inverse) in L x L.
Vec split_rank2_point(const UnitaryAlgebra& e, const Rational& a, const Rational& b) {
    Vec u{a, b, 1 / (a * b)};
    Vec v{1 / a, 1 / b, a * b};
    return e.from_switch_pair(u, v);
}

// WeilRestriction with split K: z in K0* -> ((1/N(z), z), (N(z), z^-1)).
Vec weil_split_point(const UnitaryAlgebra& ealg, const KElem& z) {
    Rational a0 = ealg.L().alpha0();
    Rational n = z.a * z.a - a0 * z.b * z.b;
    Vec u{1 / n, z.a, z.b};
    Vec v{n, z.a / n, -z.b / n};  // z^{-1} = conj(z)/N(z)
    return ealg.from_switch_pair(u, v);
}

// WeilRestriction with K = K0 a field: z in K* -> (conj(z)/z, conj(z)^-1, z)
// through E = K x (K0 (x) K) = K x K x K.
Vec weil_field_point(const UnitaryAlgebra& ealg, const KElem& z) {
    const QuadraticEtale& k = ealg.K();
    KElem zc = k.conj(z);
    KElem zi = *k.inverse(z);
    KElem c1 = k.mul(zc, zi);        // conj(z)/z
    KElem p = *k.inverse(zc);        // conj(z)^{-1}
    KElem q = z;
    Rational alpha = k.alpha();
    Vec x(6);
    x[0] = c1.a;
    x[1] = c1.b;
    x[2] = (p.a + q.a) / 2;
    x[5] = (p.a - q.a) / (2 * alpha);
    x[3] = (p.b + q.b) / 2;
    x[4] = (p.b - q.b) / 2;
    return x;
}

// third K x K x K coordinate of the mixed/field presentation
KElem weil_field_readoff(const UnitaryAlgebra& ealg, const Vec& x) {
    Rational alpha = ealg.K().alpha();
    return KElem{x[2] - alpha * x[5], x[3] - x[4]};
}

// NormOneSquare: (k1, k2) norm-one pair -> (k1, k2, (k1 k2)^{-1}) in K^3.
Vec norm_one_square_point(const UnitaryAlgebra& ealg, const KElem& k1, const KElem& k2) {
    const QuadraticEtale& k = ealg.K();
    KElem k3 = *k.inverse(k.mul(k1, k2));
    return Vec{k1.a, k1.b, k2.a, k2.b, k3.a, k3.b};
}

}  // namespace

std::vector<Vec> UnitaryTorus::sample_points(Rng& rng, int count) const {
    std::vector<Vec> out;
    TorusShape shape = classify();
    const auto& e = ealg_;
    switch (shape.tag) {
        case TorusShapeTag::SplitRank2:
            for (int i = 0; i < count; ++i)
                out.push_back(split_rank2_point(e, rng.nonzero_rational(7, 3),
                                                  rng.nonzero_rational(7, 3)));
            break;
        case TorusShapeTag::WeilRestriction:
            for (int i = 0; i < count; ++i) {
                if (K().split())
                    out.push_back(weil_split_point(e, rnd_k_unit(QuadraticEtale(L().alpha0()), rng)));
                else
                    out.push_back(weil_field_point(e, rnd_k_unit(K(), rng)));
            }
            break;
        case TorusShapeTag::NormOneSquare:
            for (int i = 0; i < count; ++i) {
                KElem k1 = K().norm_one_from(rnd_k_unit(K(), rng));
                KElem k2 = K().norm_one_from(rnd_k_unit(K(), rng));
                out.push_back(norm_one_square_point(e, k1, k2));
            }
            break;
        case TorusShapeTag::General: {
            if (K().split()) {
                // points are (u, u^{-1}) with N_L(u) = 1; harvest pairs of
                // small L-elements with equal norms
                const auto& la = L().algebra();
                std::map<Rational, std::vector<Vec>> buckets;
                for (long a = -4; a <= 4; ++a)
                    for (long b = -4; b <= 4; ++b)
                        for (long c = -4; c <= 4; ++c) {
                            Vec l{Rational(a), Rational(b), Rational(c)};
                            Rational n = la.norm(l);
                            if (n == 0) continue;
                            buckets[n].push_back(l);
                        }
                for (const auto& [n, elems] : buckets) {
                    for (std::size_t i = 0; i + 1 < elems.size() && out.size() < static_cast<std::size_t>(count); ++i) {
                        Vec u = la.mul(elems[i], *la.inverse(elems[i + 1]));
                        Vec v = *la.inverse(u);
                        out.push_back(e.from_switch_pair(u, v));
                    }
                    if (out.size() >= static_cast<std::size_t>(count)) break;
                }
            } else {
                out.push_back(e.E().unit());
            }
            break;
        }
    }
    return out;
}

ShapeCheckReport shape_isomorphism_check(const UnitaryTorus& t, Rng& rng, int samples) {
    TorusShape shape = t.classify();
    if (shape.tag == TorusShapeTag::General)
        throw NumberError("shape_isomorphism_check: no closed-form isomorphism for this torus");
    ShapeCheckReport rep;
    rep.shape = shape.str();
    rep.samples = samples;
    const UnitaryAlgebra& e = t.ealg();
    const EtaleAlgebra& ea = e.E();

    if (shape.tag == TorusShapeTag::SplitRank2) {
        std::vector<std::pair<Rational, Rational>> src;
        for (int i = 0; i < samples; ++i)
            src.emplace_back(rng.nonzero_rational(7, 3), rng.nonzero_rational(7, 3));
        for (const auto& [a, b] : src) {
            Vec x = split_rank2_point(e, a, b);
            if (!t.is_point(x)) rep.images_are_points = false;
            auto [u, v] = e.to_switch_pair(x);
            if (!(u[0] == a && u[1] == b)) rep.round_trip = false;
            (void)v;
        }
        for (std::size_t i = 0; i + 1 < src.size(); ++i) {
            Vec prod = ea.mul(split_rank2_point(e, src[i].first, src[i].second),
                              split_rank2_point(e, src[i + 1].first, src[i + 1].second));
            Vec direct = split_rank2_point(e, src[i].first * src[i + 1].first,
                                           src[i].second * src[i + 1].second);
            if (!(prod == direct)) rep.multiplicative = false;
            // inverse direction on the product point
            auto [u, v] = e.to_switch_pair(prod);
            Vec back = split_rank2_point(e, u[0], u[1]);
            if (!(back == prod)) rep.onto_sampled_points = false;
            (void)v;
        }
        return rep;
    }

    if (shape.tag == TorusShapeTag::WeilRestriction) {
        bool split_k = t.K().split();
        QuadraticEtale k0 = split_k ? QuadraticEtale(t.L().alpha0()) : t.K();
        std::vector<KElem> src;
        for (int i = 0; i < samples; ++i) src.push_back(rnd_k_unit(k0, rng));
        auto fwd = [&](const KElem& z) {
            return split_k ? weil_split_point(e, z) : weil_field_point(e, z);
        };
        auto back = [&](const Vec& x) -> KElem {
            if (split_k) {
                auto [u, v] = e.to_switch_pair(x);
                (void)v;
                return KElem{u[1], u[2]};
            }
            return weil_field_readoff(e, x);
        };
        for (const auto& z : src) {
            Vec x = fwd(z);
            if (!t.is_point(x)) rep.images_are_points = false;
            if (!(back(x) == z)) rep.round_trip = false;
        }
        for (std::size_t i = 0; i + 1 < src.size(); ++i) {
            Vec prod = ea.mul(fwd(src[i]), fwd(src[i + 1]));
            if (!(prod == fwd(k0.mul(src[i], src[i + 1])))) rep.multiplicative = false;
            if (!(fwd(back(prod)) == prod)) rep.onto_sampled_points = false;
        }
        return rep;
    }

    // NormOneSquare
    std::vector<std::pair<KElem, KElem>> src;
    for (int i = 0; i < samples; ++i)
        src.emplace_back(t.K().norm_one_from(rnd_k_unit(t.K(), rng)),
                         t.K().norm_one_from(rnd_k_unit(t.K(), rng)));
    auto fwd = [&](const std::pair<KElem, KElem>& p) {
        return norm_one_square_point(e, p.first, p.second);
    };
    for (const auto& p : src) {
        Vec x = fwd(p);
        if (!t.is_point(x)) rep.images_are_points = false;
        if (!(KElem{x[0], x[1]} == p.first && KElem{x[2], x[3]} == p.second))
            rep.round_trip = false;
    }
    for (std::size_t i = 0; i + 1 < src.size(); ++i) {
        Vec prod = ea.mul(fwd(src[i]), fwd(src[i + 1]));
        std::pair<KElem, KElem> comp{t.K().mul(src[i].first, src[i + 1].first),
                                     t.K().mul(src[i].second, src[i + 1].second)};
        if (!(prod == fwd(comp))) rep.multiplicative = false;
        std::pair<KElem, KElem> readoff{KElem{prod[0], prod[1]}, KElem{prod[2], prod[3]}};
        if (!(fwd(readoff) == prod)) rep.onto_sampled_points = false;
    }
    return rep;
}

}  // namespace toruslab
