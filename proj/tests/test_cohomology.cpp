#include "toruslab/cohomology.hpp"

#include "doctest.h"

using namespace toruslab;

namespace {

const Poly kCyclic({Rational(-1), Rational(-3), Rational(0), Rational(1)});

std::shared_ptr<const UnitaryTorus> torus(const CubicEtale& l, const Rational& alpha) {
    return std::make_shared<UnitaryTorus>(l, QuadraticEtale(alpha));
}

Vec lv(long a, long b, long c) { return Vec{Rational(a), Rational(b), Rational(c)}; }

KElem kv(long a, long b = 0) { return KElem{Rational(a), Rational(b)}; }

// random unit of E
CocyclePair id_pair(const UnitaryTorus& t) {
    return CocyclePair{t.L().algebra().unit(), t.K().one()};
}

Vec rnd_E_unit(const UnitaryAlgebra& e, Rng& rng) {
    while (true) {
        Vec b = rng.small_vector(6, 4, 2);
        if (e.E().is_unit(b)) return b;
    }
}

}  // namespace

TEST_CASE("class construction validates V-membership") {
    auto t = torus(CubicEtale::split_triple(), Rational(-1));
    CHECK_NOTHROW(make_class(t, lv(1, 1, 1), kv(1)));
    // N((3,3,1)) = 9 = N(3): valid
    CHECK_NOTHROW(make_class(t, lv(3, 3, 1), kv(3)));
    // N((2,1,1)) = 2 != 1
    CHECK_THROWS_AS(make_class(t, lv(2, 1, 1), kv(1)), AdmissibilityError);
    // non-unit s
    CHECK_THROWS_AS(make_class(t, lv(0, 1, 1), kv(1)), AdmissibilityError);
}

TEST_CASE("class product mechanics") {
    auto t = torus(CubicEtale::split_triple(), Rational(-1));
    auto c = make_class(t, lv(3, 3, 1), kv(3));
    auto id = make_class(t, lv(1, 1, 1), kv(1));
    CHECK(c.multiply(id).representative().s == c.representative().s);
    auto inv = c.inverse();
    auto prod = c.multiply(inv);
    CHECK(prod.is_identity_representative());
    SUBCASE("commutative on random pairs") {
        Rng rng(1);
        for (int i = 0; i < 50; ++i) {
            // pairs (w tau(w) * scalar trick): build V-members from twists
            Vec b1 = rnd_E_unit(t->ealg(), rng), b2 = rnd_E_unit(t->ealg(), rng);
            CocyclePair p1 = twist(*t, id_pair(*t), b1);
            CocyclePair p2 = twist(*t, id_pair(*t), b2);
            auto c1 = make_class(t, p1.s, p1.z);
            auto c2 = make_class(t, p2.s, p2.z);
            CHECK(c1.multiply(c2).representative().s == c2.multiply(c1).representative().s);
        }
    }
    SUBCASE("parent mismatch rejected") {
        auto t2 = torus(CubicEtale::split_triple(), Rational(2));
        auto d = make_class(t2, lv(1, 1, 1), kv(1));
        CHECK_THROWS_AS(c.multiply(d), AdmissibilityError);
    }
}

TEST_CASE("triviality: split L, field K (Example 4 shape)") {
    auto t = torus(CubicEtale::split_triple(), Rational(-1));
    SUBCASE("obstruction class ((3,3,1), 3) is certified nontrivial") {
        auto c = make_class(t, lv(3, 3, 1), kv(3));
        auto rep = is_trivial(c);
        CHECK(rep.verdict == Verdict::False);
        // some local obstruction must be recorded; (-1,3) fails at 2 and 3
        REQUIRE(rep.obstruction.has_value());
        QuadraticForm f({Rational(1), Rational(1), Rational(-3)});
        CHECK_FALSE(locally_isotropic(f, *rep.obstruction));
    }
    SUBCASE("norm classes are trivial with verified witness") {
        auto c = make_class(t, lv(2, 5, 13), kv(11, 3));  // N = 130 = 121 + 9
        auto rep = is_trivial(c);
        CHECK(rep.verdict == Verdict::True);
        REQUIRE(rep.witness.has_value());
        CHECK(verify_trivial_witness(*t, c.representative(), *rep.witness));
    }
    SUBCASE("trivial class") {
        auto rep = is_trivial(make_class(t, lv(1, 1, 1), kv(1)));
        CHECK(rep.verdict == Verdict::True);
    }
}

TEST_CASE("triviality: split K is always trivial with explicit witness") {
    Rng rng(3);
    for (const auto& l : {CubicEtale::split_triple(), CubicEtale::mixed(Rational(5))}) {
        auto t = torus(l, Rational(1));
        for (int i = 0; i < 30; ++i) {
            Vec b = rnd_E_unit(t->ealg(), rng);
            CocyclePair p = twist(*t, id_pair(*t), b);
            auto rep = is_trivial(make_class(t, p.s, p.z));
            CHECK(rep.verdict == Verdict::True);
            REQUIRE(rep.witness.has_value());
            CHECK(verify_trivial_witness(*t, p, *rep.witness));
        }
    }
}

TEST_CASE("triviality is stable under twisting by witnesses") {
    Rng rng(5);
    auto t = torus(CubicEtale::split_triple(), Rational(-1));
    auto base_true = CocyclePair{lv(2, 5, 13), kv(11, 3)};
    auto base_false = CocyclePair{lv(3, 3, 1), kv(3)};
    for (int i = 0; i < 25; ++i) {
        Vec b = rnd_E_unit(t->ealg(), rng);
        CocyclePair tw_true = twist(*t, base_true, b);
        CocyclePair tw_false = twist(*t, base_false, b);
        CHECK(is_trivial(make_class(t, tw_true.s, tw_true.z)).verdict == Verdict::True);
        CHECK(is_trivial(make_class(t, tw_false.s, tw_false.z)).verdict == Verdict::False);
    }
}

TEST_CASE("mixed L with field K (Theorem 4.20 shape)") {
    // L = Q x Q(sqrt 5), K = Q(i)
    auto t = torus(CubicEtale::mixed(Rational(5)), Rational(-1));
    SUBCASE("s0-part obstruction certifies nontriviality") {
        // s = (3, 1, 0) with z = ... N_L(s) = 3 * 1 = 3; need N_K(z) = 3:
        // 3 is not a sum of two squares, so no valid z exists; use s0 = 2:
        // N_L((2, 2, 0)) = 2*4 = 8? N((a,(p,q))) = a * (p^2-5q^2).
        // take s = (3, 3, 1): N = 3 * (9-5) = 12; impossible as z conj z? 12=N(z)
        // needs 12 = x^2+y^2: no. Use s = (5, 1, 0): N = 5 = 1+4 = N(1+2i).
        auto c = make_class(t, lv(5, 1, 0), KElem{Rational(1), Rational(2)});
        auto rep = is_trivial(c);
        // 5 is a sum of two squares but the K0-part 1 is a norm: trivial
        CHECK(rep.verdict == Verdict::True);
    }
    SUBCASE("K0-part quaternion obstruction") {
        // x0 = -1 in K0 = Q(sqrt 5): the quaternions (-1,-1) have definite
        // norm form <1,1,1,1>, which <1,-5> cannot divide, so they stay
        // division over K0 and -1 is not a norm from M = K0(i)
        auto c = make_class(t, Vec{Rational(1), Rational(-1), Rational(0)},
                            KElem{Rational(-1), Rational(0)});
        auto rep = is_trivial(c);
        CHECK(rep.verdict == Verdict::False);
    }
    SUBCASE("K0-part norm recognized: x0 = 3 since <1,-3,-3> represents -5") {
        auto c = make_class(t, Vec{Rational(1), Rational(3), Rational(0)},
                            KElem{Rational(3), Rational(0)});
        CHECK(is_trivial(c).verdict == Verdict::True);
    }
    SUBCASE("norms of M are recognized with witness") {
        // x0 = N_{M/K0}(y) for y with small coordinates
        Rng rng(7);
        const auto& e = t->ealg();
        for (int i = 0; i < 10; ++i) {
            Vec b = rnd_E_unit(e, rng);
            CocyclePair p = twist(*t, id_pair(*t), b);
            auto rep = is_trivial(make_class(t, p.s, p.z));
            CHECK(rep.verdict != Verdict::False);
        }
    }
}

TEST_CASE("decomposition mechanics (n = 3, r = 1)") {
    auto t = torus(CubicEtale::split_triple(), Rational(-1));
    SUBCASE("t o q = id on classes [(1, mu)] with explicit witness") {
        Rng rng(11);
        int done = 0;
        while (done < 100) {
            KElem z{rng.small_rational(5, 2), rng.small_rational(5, 2)};
            if (t->K().norm(z) == 0) continue;
            KElem mu = t->K().norm_one_from(z);  // mu conj(mu) = 1
            auto c = make_class(t, lv(1, 1, 1), mu);
            auto dec = decompose(c);
            // the K-part representative is mu^{-1} conj(mu) = mu^{-2};
            // the witness b = mu^{-1} (a scalar) exhibits [(1,mu^{-2})] = [(1,mu)]
            KElem mu_inv = *t->K().inverse(mu);
            Vec b = t->ealg().embed_K(mu_inv);
            CHECK(verify_twist_witness(*t, CocyclePair{lv(1, 1, 1), mu},
                                       CocyclePair{lv(1, 1, 1), dec.k_part}, b));
            ++done;
        }
    }
    SUBCASE("decompose is multiplicative on representatives") {
        Rng rng(13);
        auto mk = [&](Rng& r) {
            Vec b = rnd_E_unit(t->ealg(), r);
            CocyclePair p = twist(*t, id_pair(*t), b);
            return make_class(t, p.s, p.z);
        };
        for (int i = 0; i < 200; ++i) {
            auto c1 = mk(rng), c2 = mk(rng);
            auto d1 = decompose(c1), d2 = decompose(c2), d12 = decompose(c1.multiply(c2));
            CHECK(d12.k_part == t->K().mul(d1.k_part, d2.k_part));
            CHECK(d12.l_part == t->L().algebra().mul(d1.l_part, d2.l_part));
        }
    }
    SUBCASE("psi is a section: recomposition equals the original") {
        Rng rng(17);
        for (int i = 0; i < 100; ++i) {
            Vec b = rnd_E_unit(t->ealg(), rng);
            CocyclePair p = twist(*t, id_pair(*t), b);
            auto c = make_class(t, p.s, p.z);
            auto dec = decompose(c);
            CocyclePair lifted = psi_section(*t, dec.l_part, p.z);
            // multiply by the K-part: [(u, mu^2 conj(mu)^{-1})] * [(1, mu^{-1} conj(mu))]
            Vec s_total = t->L().algebra().mul(lifted.s, lv(1, 1, 1));
            KElem z_total = t->K().mul(lifted.z, dec.k_part);
            CHECK(s_total == p.s);
            CHECK(z_total == p.z);
        }
    }
    SUBCASE("chi kernel: mu = N_{E/K}(w) with w in U(E,tau) gives trivial [(1,mu)]") {
        Rng rng(19);
        int done = 0;
        while (done < 50) {
            Vec eu = rnd_E_unit(t->ealg(), rng);
            // w = tau(e)/e lies in U(E,tau)
            Vec w = t->ealg().E().mul(t->ealg().tau(eu), *t->ealg().E().inverse(eu));
            KElem mu = t->ealg().norm_E_over_K(w);
            auto c = make_class(t, lv(1, 1, 1), mu);
            CHECK(verify_trivial_witness(*t, c.representative(), w));
            CHECK(is_trivial(c).verdict == Verdict::True);
            ++done;
        }
    }
}

TEST_CASE("cubic field honesty: bounded search returns unknown") {
    // Example-2 type torus: cyclic cubic with split K; the class encodes
    // Q*/N_{L/Q}(L*), where 2 is not a norm (2 is inert and the field is
    // ramified only at 3); the engine must answer unknown, never a verdict
    auto t = torus(CubicEtale::field(kCyclic), Rational(1));
    // (s, z) = (2, (2,1)): N_L(2) = 8, z z~ = 2*4 = 8
    auto c = make_class(t, lv(2, 0, 0), KElem{Rational(3), Rational(-1)});
    // K split: z = a + b w -> components (a+b, a-b) = (2, 4)
    auto rep = is_trivial(c);
    CHECK(rep.verdict == Verdict::Unknown);

    SUBCASE("but norm classes in reach are certified") {
        // the identity class of the cubic torus
        auto c2 = make_class(t, t->L().algebra().unit(), kv(1));
        CHECK(is_trivial(c2).verdict == Verdict::True);
        // twist by a unit to make it nontrivial-looking
        Vec b = t->ealg().from_switch_pair(lv(0, 1, 0), lv(1, 3, 0));
        CocyclePair p = twist(*t, id_pair(*t), b);
        CHECK(is_trivial(make_class(t, p.s, p.z)).verdict == Verdict::True);
    }
}

TEST_CASE("cubic field with field K") {
    auto t = torus(CubicEtale::field(kCyclic), Rational(-1));
    SUBCASE("identity and small twists are found by the box search") {
        auto id = make_class(t, t->L().algebra().unit(), kv(1));
        CHECK(is_trivial(id).verdict == Verdict::True);
        Vec b{Rational(1), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)};
        REQUIRE(t->ealg().E().is_unit(b));
        CocyclePair p = twist(*t, id_pair(*t), b);
        auto rep = is_trivial(make_class(t, p.s, p.z));
        CHECK(rep.verdict == Verdict::True);
        REQUIRE(rep.witness.has_value());
        CHECK(verify_trivial_witness(*t, p, *rep.witness));
    }
    SUBCASE("out-of-reach classes answer unknown") {
        // large twist: witness far outside the default box
        Vec b{Rational(23), Rational(-17), Rational(41), Rational(5), Rational(-29), Rational(11)};
        REQUIRE(t->ealg().E().is_unit(b));
        CocyclePair p = twist(*t, id_pair(*t), b);
        CHECK(is_trivial(make_class(t, p.s, p.z)).verdict == Verdict::Unknown);
    }
}

TEST_CASE("h1 descriptions") {
    SUBCASE("example 3 shapes: H^1 = 0") {
        CHECK(h1_description(UnitaryTorus(CubicEtale::split_triple(), QuadraticEtale(Rational(1))))
                  .trivial == Verdict::True);
        CHECK(h1_description(UnitaryTorus(CubicEtale::mixed(Rational(5)), QuadraticEtale(Rational(1))))
                  .trivial == Verdict::True);
        CHECK(h1_description(UnitaryTorus(CubicEtale::mixed(Rational(-1)), QuadraticEtale(Rational(-1))))
                  .trivial == Verdict::True);
    }
    SUBCASE("example 4 shape: (Q*/N)^2 with certificate") {
        UnitaryTorus t(CubicEtale::split_triple(), QuadraticEtale(Rational(-1)));
        auto d = h1_description(t);
        CHECK(d.group == "(Q*/N_{K/Q}(K*))^2");
        CHECK(d.trivial == Verdict::False);
        REQUIRE(d.nontrivial_class.has_value());
        auto tp = std::make_shared<UnitaryTorus>(t);
        auto c = make_class(tp, d.nontrivial_class->s, d.nontrivial_class->z);
        CHECK(is_trivial(c).verdict == Verdict::False);
    }
    SUBCASE("theorem 4.20 shape") {
        UnitaryTorus t(CubicEtale::mixed(Rational(5)), QuadraticEtale(Rational(-1)));
        auto d = h1_description(t);
        CHECK(d.group == "K0*/N_{K (x) K0 / K0}((K (x) K0)*)");
        CHECK(d.trivial == Verdict::False);
        REQUIRE(d.nontrivial_class.has_value());
    }
    SUBCASE("general cubic") {
        auto d = h1_description(UnitaryTorus(CubicEtale::field(kCyclic), QuadraticEtale(Rational(1))));
        CHECK(d.group == "Q*/N_{L/Q}(L*)");
        CHECK(d.trivial == Verdict::Unknown);
    }
}

TEST_CASE("norm_E_over_L membership (H^1 of the full unitary group)") {
    SUBCASE("split L, K = Q(i)") {
        UnitaryAlgebra e(CubicEtale::split_triple(), QuadraticEtale(Rational(-1)));
        CHECK(norm_E_over_L_member(e, lv(1, 1, 1)).verdict == Verdict::True);
        auto good = norm_E_over_L_member(e, lv(2, 5, 13));
        CHECK(good.verdict == Verdict::True);
        REQUIRE(good.witness.has_value());
        auto bad = norm_E_over_L_member(e, lv(3, 1, 1));
        CHECK(bad.verdict == Verdict::False);
        REQUIRE(bad.obstruction.has_value());
        QuadraticForm f({Rational(1), Rational(1), Rational(-3)});
        CHECK_FALSE(locally_isotropic(f, *bad.obstruction));
    }
    SUBCASE("cubic L bounded search") {
        UnitaryAlgebra e(CubicEtale::field(kCyclic), QuadraticEtale(Rational(-1)));
        CHECK(norm_E_over_L_member(e, lv(1, 0, 0)).verdict == Verdict::True);
        CHECK(h1_full_unitary_group(UnitaryTorus(CubicEtale::field(kCyclic),
                                                 QuadraticEtale(Rational(-1)))) ==
              "L*/N_{E/L}(E*)");
    }
}

TEST_CASE("solve_norm_E_over_K") {
    Rng rng(23);
    SUBCASE("split and mixed L are constructive") {
        for (const auto& l : {CubicEtale::split_triple(), CubicEtale::mixed(Rational(7))}) {
            UnitaryAlgebra e(l, QuadraticEtale(Rational(-2)));
            for (int i = 0; i < 20; ++i) {
                KElem mu{rng.small_rational(5, 2), rng.small_rational(5, 2)};
                if (e.K().norm(mu) == 0) continue;
                auto b = solve_norm_E_over_K(e, mu);
                REQUIRE(b.has_value());
                CHECK(e.norm_E_over_K(*b) == mu);
            }
        }
    }
    SUBCASE("cubic L: cubes and small elements work, others give nullopt") {
        UnitaryAlgebra e(CubicEtale::field(kCyclic), QuadraticEtale(Rational(-1)));
        auto b = solve_norm_E_over_K(e, KElem{Rational(8), Rational(0)});
        REQUIRE(b.has_value());
        CHECK(e.norm_E_over_K(*b) == KElem{Rational(8), Rational(0)});
    }
}
