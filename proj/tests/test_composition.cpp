#include "toruslab/composition.hpp"
#include "toruslab/rng.hpp"

#include "doctest.h"

using namespace toruslab;

namespace {

CompositionAlgebra cayley() {
    return CompositionAlgebra({Rational(-1), Rational(-1), Rational(-1)});
}

Vec rnd_elt(Rng& rng, const CompositionAlgebra& c) {
    return rng.small_vector(c.dim(), 5, 2);
}

}  // namespace

TEST_CASE("doubling product basics") {
    CompositionAlgebra q({Rational(3)});
    // i^2 = a in CD(Q; a)
    CHECK(q.multiply(q.basis(1), q.basis(1)) == Vec{Rational(3), Rational(0)});
    CompositionAlgebra c = cayley();
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        Vec x = rnd_elt(rng, c);
        CHECK(c.multiply(c.one(), x) == x);
        CHECK(c.multiply(x, c.one()) == x);
    }
    CHECK_THROWS_AS(CompositionAlgebra({Rational(0)}), NumberError);
    CHECK_THROWS_AS(CompositionAlgebra(std::vector<Rational>{}), NumberError);
}

TEST_CASE("octonions are not associative") {
    CompositionAlgebra c = cayley();
    Vec lhs = c.multiply(c.multiply(c.basis(1), c.basis(2)), c.basis(4));
    Vec rhs = c.multiply(c.basis(1), c.multiply(c.basis(2), c.basis(4)));
    CHECK(lhs != rhs);
}

TEST_CASE("alternative laws hold exactly") {
    Rng rng(2);
    CompositionAlgebra c = cayley();
    CompositionAlgebra c2({Rational(2), Rational(-3), Rational(5)});
    for (const auto& alg : {c, c2}) {
        for (int i = 0; i < 500; ++i) {
            Vec x = rnd_elt(rng, alg), y = rnd_elt(rng, alg);
            CHECK(alg.multiply(x, alg.multiply(x, y)) ==
                  alg.multiply(alg.multiply(x, x), y));
            CHECK(alg.multiply(alg.multiply(y, x), x) ==
                  alg.multiply(y, alg.multiply(x, x)));
        }
    }
}

TEST_CASE("norm form and composition law") {
    CompositionAlgebra c = cayley();
    CHECK(c.norm_form().expansion().entries() ==
          std::vector<Rational>(8, Rational(1)));
    SUBCASE("norm is multiplicative in dims 2, 4, 8") {
        Rng rng(3);
        for (auto params : {std::vector<Rational>{Rational(5)},
                            std::vector<Rational>{Rational(-2), Rational(7)},
                            std::vector<Rational>{Rational(-1), Rational(3), Rational(-5)}}) {
            CompositionAlgebra alg(params);
            for (int i = 0; i < 1000; ++i) {
                Vec x = rnd_elt(rng, alg), y = rnd_elt(rng, alg);
                CHECK(alg.norm(alg.multiply(x, y)) == alg.norm(x) * alg.norm(y));
            }
        }
    }
    SUBCASE("x conj(x) = n(x) 1") {
        Rng rng(4);
        CompositionAlgebra alg({Rational(2), Rational(-3), Rational(-1)});
        for (int i = 0; i < 200; ++i) {
            Vec x = rnd_elt(rng, alg);
            Vec prod = alg.multiply(x, alg.conj(x));
            CHECK(prod[0] == alg.norm(x));
            for (std::size_t k = 1; k < 8; ++k) CHECK(prod[k] == 0);
        }
    }
    SUBCASE("norm agrees with the Pfister expansion on coordinates") {
        Rng rng(5);
        CompositionAlgebra alg({Rational(-7), Rational(11), Rational(-13)});
        PfisterForm nf = alg.norm_form();
        const QuadraticForm& exp = nf.expansion();
        for (int i = 0; i < 100; ++i) {
            Vec x = rnd_elt(rng, alg);
            CHECK(alg.norm(x) == exp.eval(x));
        }
    }
}

TEST_CASE("division and split tests") {
    CHECK(is_division(cayley()));
    CHECK_FALSE(is_division(CompositionAlgebra({Rational(1), Rational(-1), Rational(-1)})));
    CHECK_FALSE(is_division(CompositionAlgebra({Rational(-1), Rational(-1), Rational(7)})));
    CHECK(is_division(CompositionAlgebra({Rational(-1), Rational(-1)})));  // Hamilton quaternions
    CHECK(cayley().is_split() == false);
}

TEST_CASE("quadratic subalgebra embedding") {
    CompositionAlgebra c = cayley();
    CHECK(embeds_quadratic(QuadraticEtale(Rational(-1)), c));
    CHECK_FALSE(embeds_quadratic(QuadraticEtale(Rational(2)), c));
    // split K embeds only into split C
    CHECK_FALSE(embeds_quadratic(QuadraticEtale(Rational(1)), c));
    CompositionAlgebra split({Rational(1), Rational(-1), Rational(-1)});
    CHECK(embeds_quadratic(QuadraticEtale(Rational(1)), split));

    SUBCASE("split C accepts every K") {
        Rng rng(6);
        for (int i = 0; i < 20; ++i) {
            QuadraticEtale k(rng.nonzero_rational());
            CHECK(embeds_quadratic(k, split));
        }
    }
}

TEST_CASE("hermitian structure on K-perp") {
    CompositionAlgebra c = cayley();
    Vec j = c.basis(1);  // j^2 = -1
    auto h = hermitian_structure(c, j);
    CHECK(h.alpha == -1);

    SUBCASE("h(x,x) = N(x,x) = 2n(x) on K-perp") {
        for (const auto& b : h.basis) {
            KElem v = hermitian_form(c, j, b, b);
            CHECK(v.b == 0);
            CHECK(v.a == 2 * c.norm(b));
        }
    }
    SUBCASE("conjugate symmetry on random pairs of K-perp vectors") {
        Rng rng(7);
        QuadraticEtale k(Rational(-1));
        for (int i = 0; i < 100; ++i) {
            // random K-linear combinations of the hermitian basis
            auto sample = [&]() {
                Vec v = c.zero();
                for (const auto& b : h.basis) {
                    Rational s = rng.small_rational(4, 2), t = rng.small_rational(4, 2);
                    v = c.add(v, c.add(c.scale(s, b), c.scale(t, c.multiply(j, b))));
                }
                return v;
            };
            Vec x = sample(), y = sample();
            KElem xy = hermitian_form(c, j, x, y);
            KElem yx = hermitian_form(c, j, y, x);
            CHECK(yx == k.conj(xy));
        }
    }
    SUBCASE("K-linearity in the first slot") {
        Rng rng(8);
        for (int i = 0; i < 100; ++i) {
            const Vec& x = h.basis[static_cast<std::size_t>(rng.range(0, 2))];
            const Vec& y = h.basis[static_cast<std::size_t>(rng.range(0, 2))];
            QuadraticEtale k(Rational(-1));
            KElem lhs = hermitian_form(c, j, c.multiply(j, x), y);
            KElem rhs = k.mul(KElem{Rational(0), Rational(1)}, hermitian_form(c, j, x, y));
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("K-perp has K-rank 3 and gram is invertible diagonal") {
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK_FALSE((h.gram[i][i].a == 0 && h.gram[i][i].b == 0));
            for (std::size_t jj = 0; jj < 3; ++jj)
                if (i != jj) CHECK((h.gram[i][jj].a == 0 && h.gram[i][jj].b == 0));
        }
    }
    SUBCASE("rejects bad designated elements") {
        CHECK_THROWS_AS(hermitian_structure(c, c.one()), NumberError);          // scalar
        CHECK_THROWS_AS(hermitian_structure(c, c.add(c.one(), c.basis(1))), NumberError);
        CompositionAlgebra quat({Rational(-1), Rational(-1)});
        CHECK_THROWS_AS(hermitian_structure(quat, quat.basis(1)), NumberError);  // dim 4
    }
    SUBCASE("works in a split octonion algebra") {
        CompositionAlgebra split({Rational(1), Rational(-1), Rational(-1)});
        auto hs = hermitian_structure(split, split.basis(2));
        CHECK(hs.alpha == -1);
    }
}

TEST_CASE("conjugation is an involution with scalar trace") {
    Rng rng(9);
    CompositionAlgebra c({Rational(-2), Rational(3), Rational(7)});
    for (int i = 0; i < 100; ++i) {
        Vec x = rnd_elt(rng, c);
        CHECK(c.conj(c.conj(x)) == x);
        Vec t = c.add(x, c.conj(x));
        for (std::size_t k = 1; k < 8; ++k) CHECK(t[k] == 0);
    }
}
