#include "doctest.h"

#include "ellsolve/exactnum.hpp"
#include "ellsolve/poly.hpp"

#include <random>

using namespace ellsolve;

TEST_CASE("rational helpers keep canonical form") {
    BigRational q = make_rational(BigInt(6), BigInt(-4));
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(rat_str(q) == "-3/2");
    CHECK(rat_str(parse_rational("10/5")) == "2");
    CHECK(parse_rational("-7") == BigRational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("2x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("squarefree decomposition") {
    auto d = squarefree_decompose(BigInt(1));
    CHECK(d.squarefree == 1);
    CHECK(d.root == 1);

    d = squarefree_decompose(BigInt(12));
    CHECK(d.squarefree == 3);
    CHECK(d.root == 2);

    d = squarefree_decompose(BigInt(-50));
    CHECK(d.squarefree == -2);
    CHECK(d.root == 5);

    CHECK_THROWS_WITH_AS(squarefree_decompose(BigInt(0)),
                         "zero has no squarefree decomposition", std::invalid_argument);
}

TEST_CASE("squarefree decomposition reproduces the input (random)") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 300; ++i) {
        long n = static_cast<long>(rng() % 2000000) - 1000000;
        if (n == 0) continue;
        auto d = squarefree_decompose(BigInt(n));
        CHECK(d.squarefree * d.root * d.root == n);
        CHECK(d.root > 0);
        CHECK(sign_of(d.squarefree) == (n > 0 ? 1 : -1));
        // squarefree part has no square divisor > 1
        auto f = factorize(d.squarefree);
        for (const auto& [p, e] : f.primes) CHECK(e == 1);
    }
}

TEST_CASE("trial-division oracle agrees on -50") {
    // independent oracle: largest square divisor by brute force
    long n = -50;
    long best = 1;
    for (long r = 1; r * r <= 50; ++r)
        if (50 % (r * r) == 0) best = r;
    auto d = squarefree_decompose(BigInt(n));
    CHECK(d.root == best);
}

TEST_CASE("rational square roots") {
    CHECK(rational_square_root(BigRational(0)) == BigRational(0));
    CHECK(rational_square_root(make_rational(5625, 64)) == make_rational(75, 8));
    CHECK(!rational_square_root(BigRational(2)).has_value());
    CHECK(!rational_square_root(BigRational(-4)).has_value());
    CHECK(rational_square_root(make_rational(49, 9)) == make_rational(7, 3));
}

TEST_CASE("rational square root: divisor-based oracle on small inputs") {
    // q = p/q square iff both p and q are squares (reduced); oracle by scan
    auto oracle_square = [](long n) {
        for (long r = 0; r * r <= n; ++r)
            if (r * r == n) return true;
        return false;
    };
    for (long num = 0; num <= 60; ++num)
        for (long den = 1; den <= 30; ++den) {
            BigRational q = make_rational(num, den);
            bool present = rational_square_root(q).has_value();
            bool expect =
                oracle_square(q.get_num().get_si()) && oracle_square(q.get_den().get_si());
            CHECK(present == expect);
            if (present) {
                auto r = *rational_square_root(q);
                CHECK(r * r == q);
                CHECK(sign_of(r) >= 0);
            }
        }
}

TEST_CASE("integer roots of small polynomials") {
    // x^3 - 7x^2 + 10x: zeros at 0, 2, 5
    auto r = integer_roots({BigInt(0), BigInt(10), BigInt(-7), BigInt(1)});
    CHECK(r == std::vector<BigInt>{0, 2, 5});

    r = integer_roots({BigInt(1), BigInt(0), BigInt(0), BigInt(1)});  // x^3 + 1
    CHECK(r == std::vector<BigInt>{-1});

    r = integer_roots({BigInt(-2), BigInt(0), BigInt(0), BigInt(1)});  // x^3 - 2
    CHECK(r.empty());

    CHECK_THROWS_AS(integer_roots({BigInt(0), BigInt(0)}), std::invalid_argument);
}

TEST_CASE("integer roots verified by substitution (random products)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        long r1 = static_cast<long>(rng() % 2001) - 1000;
        long r2 = static_cast<long>(rng() % 2001) - 1000;
        long r3 = static_cast<long>(rng() % 2001) - 1000;
        // (x - r1)(x - r2)(x - r3)
        BigInt c0 = BigInt(-r1) * r2 * r3 * -1;
        std::vector<BigInt> coeffs = {BigInt(-1) * r1 * r2 * r3,
                                      BigInt(r1) * r2 + BigInt(r1) * r3 + BigInt(r2) * r3,
                                      BigInt(-(r1 + r2 + r3)), BigInt(1)};
        auto roots = integer_roots(coeffs);
        std::vector<BigInt> expect{BigInt(r1), BigInt(r2), BigInt(r3)};
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        CHECK(roots == expect);
    }
}

TEST_CASE("rational roots on mixed polynomials") {
    // (2x - 3)(x + 5)(3x + 1) = 6x^3 + 31x^2 - 34x - 15... compute:
    PolyQ p = PolyQ({BigRational(-3), BigRational(2)}) * PolyQ({BigRational(5), BigRational(1)}) *
              PolyQ({BigRational(1), BigRational(3)});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == BigRational(-5));
    CHECK(roots[1] == make_rational(-1, 3));
    CHECK(roots[2] == make_rational(3, 2));

    // irrational pair: x^2 - 2
    auto none = rational_roots(PolyQ({BigRational(-2), BigRational(0), BigRational(1)}));
    CHECK(none.empty());

    // repeated rational root: (x - 4)^2 (x + 1)
    PolyQ sq = PolyQ({BigRational(-4), BigRational(1)}) * PolyQ({BigRational(-4), BigRational(1)}) *
               PolyQ({BigRational(1), BigRational(1)});
    auto rr = rational_roots(sq);
    CHECK(rr == std::vector<BigRational>{BigRational(-1), BigRational(4)});
}

TEST_CASE("simplest rational in interval") {
    CHECK(simplest_rational_in(make_rational(1, 3), make_rational(1, 2)) == make_rational(1, 2));
    CHECK(simplest_rational_in(make_rational(7, 24), make_rational(8, 24)) == make_rational(1, 3));
    CHECK(simplest_rational_in(BigRational(-2), BigRational(3)) == BigRational(0));
    CHECK(simplest_rational_in(make_rational(141, 100), make_rational(142, 100)) ==
          make_rational(17, 12));
}

TEST_CASE("sturm counting") {
    // (x^2 - 2)(x - 1): roots -sqrt2, 1, sqrt2
    PolyQ p = PolyQ({BigRational(-2), BigRational(0), BigRational(1)}) *
              PolyQ({BigRational(-1), BigRational(1)});
    CHECK(count_real_roots(p) == 3);
    CHECK(count_real_roots_above(p, BigRational(0)) == 2);
    CHECK(count_real_roots_above(p, BigRational(1)) == 1);  // strictly above
    CHECK(count_real_roots_above(p, BigRational(2)) == 0);
}

TEST_CASE("divisor enumeration") {
    CHECK(divisors(BigInt(12)) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
    CHECK(squarefree_divisors(BigInt(12)) == std::vector<BigInt>{1, 2, 3, 6});
    CHECK(squarefree_divisors(BigInt(-25)) == std::vector<BigInt>{1, 5});
}
