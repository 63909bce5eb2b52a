#pragma once

#include "ellsolve/exactnum.hpp"

#include <string>
#include <vector>

namespace ellsolve {

// Dense univariate polynomial over Q; coeffs[i] is the x^i coefficient.
// Normalized so the leading stored coefficient is nonzero (zero poly = {}).
class PolyQ {
  public:
    PolyQ() = default;
    explicit PolyQ(std::vector<BigRational> coeffs);
    static PolyQ constant(const BigRational& c);
    static PolyQ x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigRational& coeff(size_t i) const;
    const std::vector<BigRational>& coeffs() const { return c_; }
    const BigRational& leading() const;

    BigRational eval(const BigRational& x) const;
    int sign_at(const BigRational& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    PolyQ derivative() const;
    PolyQ primitive_integer() const;  // scaled by a positive rational to primitive Z[x]

    friend PolyQ operator+(const PolyQ&, const PolyQ&);
    friend PolyQ operator-(const PolyQ&, const PolyQ&);
    friend PolyQ operator*(const PolyQ&, const PolyQ&);
    PolyQ operator-() const;
    PolyQ operator*(const BigRational& s) const;
    bool operator==(const PolyQ&) const = default;

    // Euclidean division; both defined whenever divisor is nonzero.
    static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r);
    static PolyQ gcd(const PolyQ& a, const PolyQ& b);  // monic

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<BigRational> c_;
    void trim();
};

// Number of distinct real roots in the open interval (lo, hi); either bound
// may be infinite via the *_unbounded flags.
struct SturmChain {
    std::vector<PolyQ> seq;
    explicit SturmChain(const PolyQ& squarefree);
    int variations_at(const BigRational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;
};

int count_real_roots(const PolyQ& p);
int count_real_roots_above(const PolyQ& p, const BigRational& x0);  // strictly greater

// Closed intervals [lo,hi], each containing exactly one real root of p
// (endpoints are never roots); exact rational roots found along the way are
// reported separately.
struct RootIsolation {
    std::vector<std::pair<BigRational, BigRational>> intervals;
    std::vector<BigRational> exact;
};
RootIsolation isolate_real_roots(const PolyQ& p);

// The unique rational of smallest denominator in [lo, hi].
BigRational simplest_rational_in(const BigRational& lo, const BigRational& hi);

// All rational roots, ascending, each verified by substitution.  No integer
// factorization involved: roots are pinned by exact bisection plus
// simplest-rational reconstruction.
std::vector<BigRational> rational_roots(const PolyQ& p);

// Integer roots of a polynomial with integer coefficients (ascending order).
// coeffs[i] multiplies x^i.  Throws on the zero polynomial.
std::vector<BigInt> integer_roots(const std::vector<BigInt>& coeffs);

// Integer roots of x^3 + a x^2 + b x + c by sign bisection on the monotone
// pieces; much cheaper than general isolation and heavily used by the
// torsion enumeration.
std::vector<BigInt> monic_cubic_integer_roots(const BigInt& a, const BigInt& b, const BigInt& c);

}  // namespace ellsolve
