#include "ellsolve/exactnum.hpp"

#include <algorithm>

namespace ellsolve {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (sign_of(den) == 0) throw std::invalid_argument("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string num_s = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw bad();
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw bad();
    };
    check_int(num_s);
    check_int(den_s);
    BigInt num(num_s), den(den_s);
    if (sign_of(den) == 0) throw bad();
    return make_rational(num, den);
}

std::string rat_str(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_str(const BigInt& n) { return n.get_str(); }

BigInt isqrt_floor(const BigInt& n) {
    if (sign_of(n) < 0) throw std::domain_error("isqrt of negative integer");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (sign_of(n) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    return isqrt_floor(n);
}

bool is_square(const BigInt& n) {
    return sign_of(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

std::optional<BigInt> exact_cbrt(const BigInt& n) {
    BigInt r;
    const int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<BigRational> rational_square_root(const BigRational& q) {
    if (sign_of(q) < 0) return std::nullopt;
    const auto n = exact_sqrt(q.get_num());
    if (!n) return std::nullopt;
    const auto d = exact_sqrt(q.get_den());
    if (!d) return std::nullopt;
    return make_rational(*n, *d);
}

bool is_rational_square(const BigRational& q) {
    return rational_square_root(q).has_value();
}

namespace {

// After trial division up to L, a cofactor c > 1 has all prime factors > L.
// Peel it apart as far as certifiable; give up honestly otherwise.
void absorb_cofactor(Factorization& f, BigInt c, unsigned long limit, unsigned mult) {
    if (c == 1) return;
    if (mpz_probab_prime_p(c.get_mpz_t(), 40)) {
        f.primes.emplace_back(c, mult);
        return;
    }
    if (const auto s = exact_sqrt(c)) {
        absorb_cofactor(f, *s, limit, 2 * mult);
        return;
    }
    if (const auto s = exact_cbrt(c)) {
        absorb_cofactor(f, *s, limit, 3 * mult);
        return;
    }
    // c composite, not a perfect power.  Below L^3 it can only be a product
    // of two distinct primes, which is all we need to know.
    BigInt bound(limit);
    bound = bound * bound * bound;
    if (c < bound) {
        f.primes.emplace_back(c, mult);  // squarefree semi-prime, treated atomically
        return;
    }
    throw FactorBudgetError("factoring budget exceeded for " + c.get_str());
}

}  // namespace

Factorization factorize(const BigInt& n, unsigned long trial_limit) {
    if (sign_of(n) == 0) throw std::invalid_argument("factorize(0)");
    Factorization f;
    f.sign = sign_of(n);
    BigInt m = abs(n);
    auto strip = [&](const BigInt& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) f.primes.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (BigInt p = 5; p <= trial_limit && p * p <= m; p += (mpz_fdiv_ui(p.get_mpz_t(), 6) == 5 ? 2 : 4)) {
        strip(p);
    }
    if (m > 1) {
        if (m <= BigInt(trial_limit) * BigInt(trial_limit)) {
            // no factor <= limit and m <= limit^2, so m is prime
            f.primes.emplace_back(m, 1);
        } else {
            absorb_cofactor(f, m, trial_limit, 1);
        }
    }
    std::sort(f.primes.begin(), f.primes.end());
    return f;
}

SquarefreeDecomposition squarefree_decompose(const BigInt& n, unsigned long trial_limit) {
    if (sign_of(n) == 0)
        throw std::invalid_argument("zero has no squarefree decomposition");
    const auto f = factorize(n, trial_limit);
    SquarefreeDecomposition out{BigInt(f.sign), BigInt(1)};
    for (const auto& [p, e] : f.primes) {
        if (e % 2) out.squarefree *= p;
        for (unsigned i = 0; i < e / 2; ++i) out.root *= p;
    }
    return out;
}

std::vector<BigInt> divisors(const BigInt& n, unsigned long trial_limit) {
    const auto f = factorize(n, trial_limit);
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : f.primes) {
        const size_t base = out.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BigInt> squarefree_divisors(const BigInt& n, unsigned long trial_limit) {
    const auto f = factorize(n, trial_limit);
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : f.primes) {
        const size_t base = out.size();
        for (size_t j = 0; j < base; ++j) out.push_back(out[j] * p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ellsolve
