#pragma once

#include "ellsolve/curve.hpp"
#include "ellsolve/solution.hpp"

#include <array>
#include <vector>

namespace ellsolve {

// Brute force over x + y + z = N = x y z in integers: every (x, y, z, N) with
// N in [1, n_max] and |x|, |y|, |z| <= coord_max, canonically ordered.
struct IntegerLemmaHit {
    long n;
    std::array<long, 3> xyz;
};
std::vector<IntegerLemmaHit> integer_lemma_check(long n_max, long coord_max);

// (A+t)^n + (B+t)^n + (t-C)^n + (t-D)^n + (t-E)^n ==
// (t-A)^n + (t-B)^n + (C+t)^n + (D+t)^n + (E+t)^n for n = 1..4, plus the seed
// identities A+B = C+D+E and A^3+B^3 = C^3+D^3+E^3.
bool multigrade_check(const BigRational& A, const BigRational& B, const BigRational& C,
                      const BigRational& D, const BigRational& E, const BigRational& t);

// The nine entries of the square built from (a, b, c), row by row, with the
// number of perfect-square entries and a distinctness flag.
struct MagicSquareReport {
    std::array<BigInt, 9> entries;
    int square_count = 0;
    bool distinct = false;
};
MagicSquareReport count_magic_squares(const BigInt& a, const BigInt& b, const BigInt& c);

// The d = -1 branch of the congruent-number descent: scans
// -N^2 p^4 + 6 N p^2 q^2 - q^4 = 4 s^2 over p, q up to the bound and maps
// each hit back to a triangle leg a (with b = 2N/a).
struct CongruentDescentHit {
    BigInt p, q, s;
    BigRational a, b;
};
std::vector<CongruentDescentHit> congruent_neg1_descent(const BigInt& N, long bound);

// x-coordinate of 2P for P = (g^2-4h, (e-g)(g^2-4h)) on the two-quadric
// curve; equals ((e^2-4f-g^2+4h)/(2(e-g)))^2, which certifies infinite order
// whenever it is not integral.
BigRational two_quadrics_doubling_x(const BigRational& e, const BigRational& f,
                                    const BigRational& g, const BigRational& h);

// Rational x with (x, *) on y^2 = x^3 + D and 2*(x, *) = (P, Q): the roots of
// x^4 - 4P x^3 - 8D x - 4DP.
std::vector<BigRational> halving_candidates(const BigRational& D, const BigRational& P);

// Search utility: N in [2, n_max] whose degree-8 median/bisector triangle has
// an integer median (none are known; reports whatever it finds).
std::vector<long> mt_integer_median_scan(long n_max);

}  // namespace ellsolve
