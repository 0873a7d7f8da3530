#include "toruslab/numbers.hpp"
#include "toruslab/rng.hpp"

#include "doctest.h"

using namespace toruslab;

TEST_CASE("rational parsing and printing round-trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-45/4") == Rational(-45, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(rational_str(Rational(6, 4)) == "3/2");
    CHECK(rational_str(Rational(-2)) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), NumberError);
    CHECK_THROWS_AS(parse_rational(""), NumberError);
    CHECK_THROWS_AS(parse_rational("abc"), NumberError);
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(Rational(8)).representative() == 2);
    CHECK(squarefree_part(Rational(1)).representative() == 1);
    // -45/4 = -5 * (3/2)^2, oracle by hand factorization
    CHECK(squarefree_part(Rational(-45, 4)).representative() == -5);
    CHECK_THROWS_AS(squarefree_part(Rational(0)), NumberError);

    SUBCASE("idempotent") {
        Rng rng(11);
        for (int i = 0; i < 200; ++i) {
            Rational q = rng.nonzero_rational(50, 20);
            auto d = squarefree_part(q);
            CHECK(squarefree_part(Rational(d.representative())) == d);
            // q / d is a square
            CHECK(is_square(q / Rational(d.representative())));
        }
    }
}

TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(2, 7) == 1);   // 3^2 = 2 mod 7
    CHECK(legendre_symbol(3, 7) == -1);  // brute force: squares mod 7 are 1,2,4
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK_THROWS_AS(legendre_symbol(3, 8), NumberError);
    CHECK_THROWS_AS(legendre_symbol(3, 2), NumberError);

    SUBCASE("agrees with brute-force residue search") {
        for (Integer p : {3, 5, 7, 11, 13}) {
            for (Integer a = 0; a < p; ++a) {
                bool residue = false;
                for (Integer x = 1; x < p; ++x)
                    if ((x * x - a) % p == 0) residue = true;
                int expect = (a == 0) ? 0 : (residue ? 1 : -1);
                CHECK(legendre_symbol(a, p) == expect);
            }
        }
    }

    SUBCASE("completely multiplicative in a, exhaustively for p <= 97") {
        for (Integer p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                          71, 73, 79, 83, 89, 97}) {
            for (Integer a = 1; a < p; ++a)
                for (Integer b = 1; b < p; ++b)
                    CHECK(legendre_symbol(a * b, p) ==
                          legendre_symbol(a, p) * legendre_symbol(b, p));
        }
    }
}

TEST_CASE("padic valuation") {
    CHECK(padic_valuation(Rational(12), 2) == 2);
    CHECK(padic_valuation(Rational(1, 9), 3) == -2);
    CHECK(padic_valuation(Rational(5), 3) == 0);
    CHECK_THROWS_AS(padic_valuation(Rational(0), 2), NumberError);
}

TEST_CASE("same_square_class") {
    CHECK(same_square_class(Rational(2), Rational(8)));
    CHECK_FALSE(same_square_class(Rational(2), Rational(-2)));
    CHECK(same_square_class(Rational(1, 2), Rational(2)));
    CHECK_THROWS_AS(same_square_class(Rational(0), Rational(1)), NumberError);

    SUBCASE("equivalence relation on random triples") {
        Rng rng(7);
        for (int i = 0; i < 200; ++i) {
            Rational a = rng.nonzero_rational(), b = rng.nonzero_rational(),
                     c = rng.nonzero_rational();
            CHECK(same_square_class(a, a));
            CHECK(same_square_class(a, b) == same_square_class(b, a));
            if (same_square_class(a, b) && same_square_class(b, c))
                CHECK(same_square_class(a, c));
        }
    }
}

TEST_CASE("factor") {
    auto f = factor(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Integer, int>{2, 3});
    CHECK(f[1] == std::pair<Integer, int>{3, 2});
    CHECK(f[2] == std::pair<Integer, int>{5, 1});
    CHECK(factor(Integer(-7)).size() == 1);
    CHECK_THROWS_AS(factor(Integer(0)), NumberError);
    // product of two primes just above the bound is rejected
    Integer big = Integer(1000003) * Integer(1000033);
    CHECK_THROWS_AS(factor(big), NumberError);
}

TEST_CASE("is_prime small cases") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
