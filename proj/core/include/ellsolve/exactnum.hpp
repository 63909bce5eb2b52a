#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellsolve {

// All arithmetic in the toolkit is exact.  BigInt / BigRational are GMP
// values; rationals are kept canonical (reduced, positive denominator) by
// constructing them only through the helpers below or through mpq arithmetic,
// which preserves canonical form.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Raised when trial division cannot certify a factorization within budget.
class FactorBudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else.
BigRational parse_rational(const std::string& text);

// "p/q"; integers render without the "/1".
std::string rat_str(const BigRational& q);
std::string int_str(const BigInt& n);

inline int sign_of(const BigInt& n) { return mpz_sgn(n.get_mpz_t()); }
inline int sign_of(const BigRational& q) { return mpq_sgn(q.get_mpq_t()); }

BigInt isqrt_floor(const BigInt& n);                 // n >= 0
std::optional<BigInt> exact_sqrt(const BigInt& n);   // present iff n is a perfect square
bool is_square(const BigInt& n);
std::optional<BigInt> exact_cbrt(const BigInt& n);   // works for negative n too

// r >= 0 with r^2 == q, if such a rational exists.
std::optional<BigRational> rational_square_root(const BigRational& q);
bool is_rational_square(const BigRational& q);

struct Factorization {
    // Prime-power decomposition of |n|, primes ascending.
    std::vector<std::pair<BigInt, unsigned>> primes;
    int sign = 1;
};

// Trial division up to trial_limit, then perfect-power / primality analysis
// of the cofactor.  Inputs here are problem parameters and curve coefficients
// with small factors; anything that cannot be certified raises
// FactorBudgetError rather than guessing.
Factorization factorize(const BigInt& n, unsigned long trial_limit = 1000000);

struct SquarefreeDecomposition {
    BigInt squarefree;  // same sign as the input
    BigInt root;        // > 0, input == squarefree * root^2
};

SquarefreeDecomposition squarefree_decompose(const BigInt& n,
                                             unsigned long trial_limit = 1000000);

// Positive divisors of |n|, ascending.
std::vector<BigInt> divisors(const BigInt& n, unsigned long trial_limit = 1000000);

// Positive squarefree divisors of |n|, ascending (1 always included).
std::vector<BigInt> squarefree_divisors(const BigInt& n,
                                        unsigned long trial_limit = 1000000);

}  // namespace ellsolve
