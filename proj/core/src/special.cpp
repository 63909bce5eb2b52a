#include "ellsolve/special.hpp"

#include "ellsolve/families.hpp"

#include <algorithm>
#include <numeric>

namespace ellsolve {

std::vector<IntegerLemmaHit> integer_lemma_check(long n_max, long coord_max) {
    std::vector<IntegerLemmaHit> hits;
    // z (xy - 1) = x + y, so scan (x, y) and divide
    for (long x = -coord_max; x <= coord_max; ++x) {
        if (x == 0) continue;
        for (long y = x; y <= coord_max; ++y) {
            if (y == 0) continue;
            const long xy1 = x * y - 1;
            if (xy1 == 0) continue;
            if ((x + y) % xy1 != 0) continue;
            const long z = (x + y) / xy1;
            if (z == 0 || z < y || z > coord_max) continue;  // canonical x <= y <= z
            const long n = x + y + z;
            if (n < 1 || n > n_max) continue;
            if (x * y * z != n) continue;
            hits.push_back({n, {x, y, z}});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const IntegerLemmaHit& a, const IntegerLemmaHit& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.xyz < b.xyz;
    });
    return hits;
}

bool multigrade_check(const BigRational& A, const BigRational& B, const BigRational& C,
                      const BigRational& D, const BigRational& E, const BigRational& t) {
    if (A + B != C + D + E) return false;
    if (A * A * A + B * B * B != C * C * C + D * D * D + E * E * E) return false;
    auto pw = [](const BigRational& x, int n) {
        BigRational acc(1);
        for (int i = 0; i < n; ++i) acc *= x;
        return acc;
    };
    for (int n = 1; n <= 4; ++n) {
        const BigRational lhs =
            pw(A + t, n) + pw(B + t, n) + pw(t - C, n) + pw(t - D, n) + pw(t - E, n);
        const BigRational rhs =
            pw(t - A, n) + pw(t - B, n) + pw(C + t, n) + pw(D + t, n) + pw(E + t, n);
        if (lhs != rhs) return false;
    }
    return true;
}

MagicSquareReport count_magic_squares(const BigInt& a, const BigInt& b, const BigInt& c) {
    MagicSquareReport rep;
    rep.entries = {a + b, a - b - c, a + c,
                   a - b + c, a, a + b - c,
                   a - c, a + b + c, a - b};
    for (const auto& e : rep.entries)
        if (is_square(e)) ++rep.square_count;
    auto sorted = rep.entries;
    std::sort(sorted.begin(), sorted.end());
    rep.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return rep;
}

std::vector<CongruentDescentHit> congruent_neg1_descent(const BigInt& N, long bound) {
    std::vector<CongruentDescentHit> hits;
    for (long p = 1; p <= bound; ++p)
        for (long q = 1; q <= bound; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const BigInt p2 = BigInt(p) * p, q2 = BigInt(q) * q;
            if (mpz_odd_p(BigInt(N * p2 + q2).get_mpz_t())) continue;  // r, u must be integers
            const BigInt val = -(N * N) * p2 * p2 + 6 * N * p2 * q2 - q2 * q2;
            if (sign_of(val) <= 0 || !mpz_divisible_ui_p(val.get_mpz_t(), 4)) continue;
            const auto s = exact_sqrt(val / 4);
            if (!s) continue;
            // r + u = N p^2, r - u = q^2, v = p q, w = r s
            const BigInt r = (N * p2 + q2) / 2;
            const BigInt u = (N * p2 - q2) / 2;
            const BigInt v = BigInt(p) * q;
            if (sign_of(u) == 0) continue;
            const BigInt w = r * *s;
            // x = -u^2/v^2, y = +-uw/v^3; a = |y/x| = |w/(u v)|
            const BigRational a = abs(make_rational(w, u * v));
            if (sign_of(a) == 0) continue;
            const BigRational bb = BigRational(2) * BigRational(N) / a;
            hits.push_back({BigInt(p), BigInt(q), *s, a, bb});
        }
    std::sort(hits.begin(), hits.end(), [](const CongruentDescentHit& x, const CongruentDescentHit& y) {
        const BigInt mx = std::max(x.p, x.q), my = std::max(y.p, y.q);
        if (mx != my) return mx < my;
        if (x.p != y.p) return x.p < y.p;
        return x.q < y.q;
    });
    return hits;
}

BigRational two_quadrics_doubling_x(const BigRational& e, const BigRational& f,
                                    const BigRational& g, const BigRational& h) {
    Params params{{"e", e}, {"f", f}, {"g", g}, {"h", h}};
    const CurveQ E = build_curve("two_quadrics", params);
    const BigRational g4 = g * g - BigRational(4) * h;
    const PointQ P(g4, (e - g) * g4);
    if (!on_curve(E, P)) throw CurveError("transformation-pole point missed the curve");
    return multiply(E, BigInt(2), P).x;
}

std::vector<BigRational> halving_candidates(const BigRational& D, const BigRational& P) {
    PolyQ poly({BigRational(-4) * D * P, BigRational(-8) * D, BigRational(0),
                BigRational(-4) * P, BigRational(1)});
    return rational_roots(poly);
}

std::vector<long> mt_integer_median_scan(long n_max) {
    std::vector<long> found;
    for (long n = 2; n <= n_max; ++n) {
        const BigRational N(n);
        // m^2 = 4 N^4 (N^2-1)(N^4+2N^3+N^2-2N-1)(N^4-2N^3+N^2+2N-1)
        const BigRational n2 = N * N, n3 = n2 * N, n4 = n2 * n2;
        const BigRational m2 = BigRational(4) * n4 * (n2 - 1) *
                               (n4 + BigRational(2) * n3 + n2 - BigRational(2) * N - 1) *
                               (n4 - BigRational(2) * n3 + n2 + BigRational(2) * N - 1);
        if (is_rational_square(m2)) found.push_back(n);
    }
    return found;
}

}  // namespace ellsolve
