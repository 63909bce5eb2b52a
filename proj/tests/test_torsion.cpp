#include "doctest.h"

#include "ellsolve/torsion.hpp"

#include <algorithm>

using namespace ellsolve;

TEST_CASE("integral model") {
    // already integral: identity scaling
    CurveQ e(BigRational(0), BigRational(-25), BigRational(0));
    auto m = integral_model(e);
    CHECK(m.lambda == 1);
    CHECK(m.curve == e);

    // a4 = 1/4 needs lambda = 2
    CurveQ f(BigRational(0), make_rational(1, 4), BigRational(0));
    auto mf = integral_model(f);
    CHECK(mf.lambda == 2);
    CHECK(mf.curve.a4 == BigRational(4));
    PointQ p(make_rational(1, 2), make_rational(3, 4));
    PointQ q = mf.to_integral(p);
    CHECK(q.x == BigRational(2));
    CHECK(q.y == BigRational(6));
    CHECK(mf.from_integral(q) == p);
}

TEST_CASE("congruent N=5 torsion: Z/2+Z/2") {
    CurveQ e(BigRational(0), BigRational(-25), BigRational(0));
    auto t = torsion_subgroup(e);
    CHECK(t.structure == "Z/2+Z/2");
    REQUIRE(t.order() == 4);
    CHECK(t.points[1] == PointQ(BigRational(-5), BigRational(0)));
    CHECK(t.points[2] == PointQ(BigRational(0), BigRational(0)));
    CHECK(t.points[3] == PointQ(BigRational(5), BigRational(0)));
}

TEST_CASE("leech N=28 torsion: Z/2+Z/4 with the stated order-4 points") {
    const BigRational N(28);
    CurveQ e(N * N + 1, N * N, BigRational(0));
    auto t = torsion_subgroup(e);
    CHECK(t.structure == "Z/2+Z/4");
    CHECK(t.order() == 8);
    auto has = [&](const PointQ& p) {
        return std::find(t.points.begin(), t.points.end(), p) != t.points.end();
    };
    CHECK(has(PointQ(N, N * (N + 1))));
    CHECK(has(PointQ(N, -(N * (N + 1)))));
    CHECK(has(PointQ(-N, N * (N - 1))));
    CHECK(has(PointQ(-N, -(N * (N - 1)))));
}

TEST_CASE("R/r N=26 torsion: Z/6") {
    const BigRational N(26);
    CurveQ e(BigRational(2) * (BigRational(2) * N * N - BigRational(2) * N - 1),
             BigRational(4) * N + 1, BigRational(0));
    auto t = torsion_subgroup(e);
    CHECK(t.structure == "Z/6");
    auto has = [&](const PointQ& p) {
        return std::find(t.points.begin(), t.points.end(), p) != t.points.end();
    };
    CHECK(has(PointQ(BigRational(0), BigRational(0))));
    CHECK(has(PointQ(BigRational(1), BigRational(2) * N)));
    CHECK(has(PointQ(BigRational(4) * N + 1, BigRational(2) * N * (BigRational(4) * N + 1))));
    // orders as stated
    CHECK(point_order(e, PointQ(BigRational(0), BigRational(0))) == 2);
    CHECK(point_order(e, PointQ(BigRational(1), BigRational(2) * N)) == 3);
    CHECK(point_order(e, PointQ(BigRational(4) * N + 1,
                                BigRational(2) * N * (BigRational(4) * N + 1))) == 6);
}

TEST_CASE("point orders on family curves") {
    // (0, 4N) of order 3 on the equal sum & product curve
    for (long n : {6L, 7L, 11L}) {
        BigRational N(n);
        CurveQ e(N * N, BigRational(8) * N * N, BigRational(16) * N * N);
        CHECK(point_order(e, PointQ(BigRational(0), BigRational(4) * N)) == 3);
    }
    // (28, 80) has infinite order on the two-cubes N=6 curve
    CurveQ tc(BigRational(0), BigRational(0), BigRational(-15552));
    CHECK(!point_order(tc, PointQ(BigRational(28), BigRational(80))).has_value());
    CHECK(point_order(tc, PointQ::inf()) == 1);
}

TEST_CASE("torsion groups are closed and Nagell-Lutz integral") {
    std::vector<CurveQ> curves = {
        CurveQ(BigRational(36), BigRational(288), BigRational(576)),  // eq sum product N=6
        CurveQ(BigRational(785), BigRational(784), BigRational(0)),   // leech N=28
        CurveQ(BigRational(27), BigRational(1), BigRational(0)),      // base/alt N=5
        CurveQ(BigRational(0), BigRational(-25), BigRational(0)),     // congruent N=5
        CurveQ(make_rational(1, 4), make_rational(-3, 16), BigRational(0)),
    };
    for (const auto& e : curves) {
        auto t = torsion_subgroup(e);
        for (const auto& p : t.points) {
            for (const auto& q : t.points) {
                PointQ s = add(e, p, q);
                CHECK(std::find(t.points.begin(), t.points.end(), s) != t.points.end());
            }
            CHECK(std::find(t.points.begin(), t.points.end(), negate(e, p)) != t.points.end());
        }
        // integral coordinates on the integral model
        auto m = integral_model(e);
        for (const auto& p : t.points) {
            if (p.infinity) continue;
            PointQ ip = m.to_integral(p);
            CHECK(ip.x.get_den() == 1);
            CHECK(ip.y.get_den() == 1);
        }
    }
}

TEST_CASE("expected torsion across families and parameters") {
    // base/alt b/a=N: Z/4
    for (long n = 2; n <= 11; ++n) {
        BigRational N(n);
        CurveQ e(N * N + 2, BigRational(1), BigRational(0));
        CHECK(torsion_subgroup(e).structure == "Z/4");
    }
    // knight: Z/6 (excluding singular 0, 1, 9)
    for (long n : {2L, 3L, 5L, 7L, 12L, 48L}) {
        BigRational N(n);
        CurveQ e(N * N - BigRational(6) * N - 3, BigRational(16) * N, BigRational(0));
        CHECK(torsion_subgroup(e).structure == "Z/6");
    }
    // knight N=10: the one value with three points of order 2
    {
        BigRational N(10);
        CurveQ e(N * N - BigRational(6) * N - 3, BigRational(16) * N, BigRational(0));
        CHECK(torsion_subgroup(e).structure == "Z/2+Z/6");
    }
    // dd50: Z/2+Z/4
    for (long n : {3L, 5L, 24L}) {
        BigRational N(n);
        CurveQ e(BigRational(4) - BigRational(2) * N * N, (N * N) * (N * N - 4), BigRational(0));
        CHECK(torsion_subgroup(e).structure == "Z/2+Z/4");
    }
    // eq sum & product: Z/3
    for (long n : {6L, 7L, 9L}) {
        BigRational N(n);
        CurveQ e(N * N, BigRational(8) * N * N, BigRational(16) * N * N);
        CHECK(torsion_subgroup(e).structure == "Z/3");
    }
    // two cubes N=2: Z/2 at (12, 0); other N: trivial
    CHECK(torsion_subgroup(CurveQ(BigRational(0), BigRational(0), BigRational(-1728))).structure ==
          "Z/2");
    CHECK(torsion_subgroup(CurveQ(BigRational(0), BigRational(0), BigRational(-15552))).structure ==
          "Z/1");
}
