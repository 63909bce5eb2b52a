#include "ellsolve/poly.hpp"

#include <algorithm>
#include <cassert>

namespace ellsolve {

PolyQ::PolyQ(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyQ::trim() {
    while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
}

PolyQ PolyQ::constant(const BigRational& c) { return PolyQ({c}); }

PolyQ PolyQ::x() { return PolyQ({BigRational(0), BigRational(1)}); }

const BigRational& PolyQ::coeff(size_t i) const {
    static const BigRational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const BigRational& PolyQ::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

BigRational PolyQ::eval(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int PolyQ::sign_at(const BigRational& x) const { return sign_of(eval(x)); }

int PolyQ::sign_at_pos_inf() const { return c_.empty() ? 0 : sign_of(c_.back()); }

int PolyQ::sign_at_neg_inf() const {
    if (c_.empty()) return 0;
    const int s = sign_of(c_.back());
    return degree() % 2 ? -s : s;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    return PolyQ(std::move(d));
}

PolyQ PolyQ::primitive_integer() const {
    if (c_.empty()) return {};
    BigInt den_lcm = 1;
    for (const auto& q : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    BigInt num_gcd = 0;
    for (const auto& q : c_) {
        BigInt scaled = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    std::vector<BigRational> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        out[i] = BigRational(c_[i].get_num() * (den_lcm / c_[i].get_den()) / num_gcd);
    return PolyQ(std::move(out));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<BigRational> out(std::max(a.c_.size(), b.c_.size()), BigRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return PolyQ(std::move(out));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ PolyQ::operator-() const {
    std::vector<BigRational> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return PolyQ(std::move(out));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator*(const BigRational& s) const {
    std::vector<BigRational> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
    return PolyQ(std::move(out));
}

void PolyQ::divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRational> rem = a.c_;
    std::vector<BigRational> quo;
    const int db = b.degree();
    while (static_cast<int>(rem.size()) - 1 >= db) {
        while (!rem.empty() && sign_of(rem.back()) == 0) rem.pop_back();
        if (static_cast<int>(rem.size()) - 1 < db) break;
        const size_t shift = rem.size() - 1 - db;
        BigRational f = rem.back() / b.leading();
        if (quo.size() < shift + 1) quo.resize(shift + 1, BigRational(0));
        quo[shift] += f;
        for (int i = 0; i <= db; ++i) rem[shift + i] -= f * b.c_[i];
        rem.pop_back();
    }
    q = PolyQ(std::move(quo));
    r = PolyQ(std::move(rem));
}

PolyQ PolyQ::gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ f = a.primitive_integer(), g = b.primitive_integer();
    while (!g.is_zero()) {
        PolyQ q, r;
        divmod(f, g, q, r);
        f = g;
        g = r.primitive_integer();
    }
    if (f.is_zero()) return f;
    return f * (BigRational(1) / f.leading());
}

std::string PolyQ::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const auto& q = c_[i];
        if (sign_of(q) == 0) continue;
        if (!out.empty()) out += sign_of(q) > 0 ? " + " : " - ";
        else if (sign_of(q) < 0) out += "-";
        const BigRational aq = abs(q);
        const bool unit = aq == 1;
        if (i == 0 || !unit) out += rat_str(aq);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

SturmChain::SturmChain(const PolyQ& p) {
    seq.push_back(p.primitive_integer());
    PolyQ d = p.derivative();
    if (!d.is_zero()) seq.push_back(d.primitive_integer());
    while (seq.size() >= 2 && !seq.back().is_zero()) {
        PolyQ q, r;
        PolyQ::divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        seq.push_back((-r).primitive_integer());
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
}  // namespace

int SturmChain::variations_at(const BigRational& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(p.sign_at(x));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& p : seq) signs.push_back(p.sign_at_pos_inf());
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& p : seq) signs.push_back(p.sign_at_neg_inf());
    return count_variations(signs);
}

namespace {

PolyQ squarefree_part(const PolyQ& p) {
    const PolyQ g = PolyQ::gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    PolyQ q, r;
    PolyQ::divmod(p, g, q, r);
    return q;
}

}  // namespace

int count_real_roots(const PolyQ& p) {
    if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
    if (p.degree() == 0) return 0;
    SturmChain s(squarefree_part(p));
    return s.variations_at_neg_inf() - s.variations_at_pos_inf();
}

int count_real_roots_above(const PolyQ& p, const BigRational& x0) {
    if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
    if (p.degree() == 0) return 0;
    SturmChain s(squarefree_part(p));
    return s.variations_at(x0) - s.variations_at_pos_inf();
}

RootIsolation isolate_real_roots(const PolyQ& p_in) {
    RootIsolation out;
    if (p_in.is_zero() || p_in.degree() == 0) return out;
    PolyQ p = squarefree_part(p_in);
    SturmChain chain(p);

    // Cauchy bound
    BigRational bound(1);
    for (int i = 0; i < p.degree(); ++i) {
        BigRational m = abs(p.coeff(i) / p.leading());
        if (m > bound) bound = m;
    }
    bound += 1;

    struct Seg {
        BigRational lo, hi;
        int nroots;
    };
    std::vector<Seg> work;
    auto roots_between = [&](const BigRational& lo, const BigRational& hi) {
        return chain.variations_at(lo) - chain.variations_at(hi);
    };
    BigRational lo = -bound, hi = bound;
    // endpoints of the Cauchy interval are never roots
    const int total = roots_between(lo, hi);
    if (total > 0) work.push_back({lo, hi, total});

    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.nroots == 1) {
            out.intervals.emplace_back(s.lo, s.hi);
            continue;
        }
        BigRational mid = (s.lo + s.hi) / 2;
        if (p.sign_at(mid) == 0) {
            out.exact.push_back(mid);
            // shrink around the exact root until it is excluded from both halves
            BigRational eps = (s.hi - s.lo) / 4;
            while (p.sign_at(mid - eps) == 0 || p.sign_at(mid + eps) == 0) eps /= 2;
            const int left = roots_between(s.lo, mid - eps);
            const int right = roots_between(mid + eps, s.hi);
            if (left > 0) work.push_back({s.lo, mid - eps, left});
            if (right > 0) work.push_back({mid + eps, s.hi, right});
            continue;
        }
        const int left = roots_between(s.lo, mid);
        const int right = s.nroots - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    return out;
}

BigRational simplest_rational_in(const BigRational& lo_in, const BigRational& hi_in) {
    BigRational lo = lo_in, hi = hi_in;
    if (lo > hi) throw std::invalid_argument("empty interval");
    // continued-fraction walk; integer part first
    bool neg = false;
    if (sign_of(lo) <= 0 && sign_of(hi) >= 0) return BigRational(0);
    if (sign_of(hi) < 0) {
        neg = true;
        std::swap(lo, hi);
        lo = -lo;
        hi = -hi;
    }
    std::vector<BigInt> cf;
    BigRational result;
    while (true) {
        BigInt fl;
        mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
        BigRational ceil_lo = (lo.get_den() == 1) ? lo : BigRational(fl + 1);
        if (ceil_lo <= hi) {
            cf.push_back(ceil_lo.get_num());
            break;
        }
        cf.push_back(fl);
        // recurse on [1/(hi-fl), 1/(lo-fl)]
        BigRational nlo = BigRational(1) / (hi - BigRational(fl));
        BigRational nhi = BigRational(1) / (lo - BigRational(fl));
        lo = nlo;
        hi = nhi;
    }
    result = BigRational(cf.back());
    for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it)
        result = BigRational(*it) + BigRational(1) / result;
    return neg ? BigRational(-result) : result;
}

namespace {

// Exact root extraction from an isolating interval: bisect, then ask whether
// the simplest rational in the shrunken interval is a root.  A rational root
// p/q is recovered once the interval is narrower than ~1/q^2, so each round
// of bisection doubles the reachable denominator size.
std::optional<BigRational> root_in_interval(const PolyQ& p, BigRational lo, BigRational hi) {
    int slo = p.sign_at(lo);
    if (slo == 0) return lo;
    if (p.sign_at(hi) == 0) return hi;
    // depth budget follows the coefficient sizes: a rational root's numerator
    // and denominator are bounded by the extreme coefficients
    size_t coeff_bits = 64;
    for (const auto& q : p.coeffs())
        coeff_bits = std::max({coeff_bits, mpz_sizeinbase(q.get_num().get_mpz_t(), 2),
                               mpz_sizeinbase(q.get_den().get_mpz_t(), 2)});
    const int bisections_per_round = 32;
    const int rounds = static_cast<int>((4 * coeff_bits + 256) / bisections_per_round) + 1;
    for (int r = 0; r < rounds; ++r) {
        for (int b = 0; b < bisections_per_round; ++b) {
            BigRational mid = (lo + hi) / 2;
            const int sm = p.sign_at(mid);
            if (sm == 0) return mid;
            if (sm == slo) lo = mid;
            else hi = mid;
        }
        BigRational cand = simplest_rational_in(lo, hi);
        if (p.sign_at(cand) == 0) return cand;
    }
    return std::nullopt;  // irrational (or of absurd height)
}

}  // namespace

std::vector<BigRational> rational_roots(const PolyQ& p_in) {
    if (p_in.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
    std::vector<BigRational> roots;
    PolyQ p = p_in;
    // strip powers of x
    size_t val = 0;
    while (val < p.coeffs().size() && sign_of(p.coeff(val)) == 0) ++val;
    if (val > 0 && val <= static_cast<size_t>(p.degree())) {
        roots.emplace_back(0);
        std::vector<BigRational> shifted(p.coeffs().begin() + val, p.coeffs().end());
        p = PolyQ(std::move(shifted));
    }
    if (p.degree() >= 1) {
        PolyQ sf = squarefree_part(p);
        auto iso = isolate_real_roots(sf);
        for (const auto& r : iso.exact) roots.push_back(r);
        for (const auto& [lo, hi] : iso.intervals)
            if (auto r = root_in_interval(sf, lo, hi)) roots.push_back(*r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& r : roots) assert(sign_of(p_in.eval(r)) == 0);
    return roots;
}

std::vector<BigInt> monic_cubic_integer_roots(const BigInt& a, const BigInt& b, const BigInt& c) {
    auto g = [&](const BigInt& x) { return BigInt(((x + a) * x + b) * x + c); };
    BigInt m = abs(a);
    if (abs(b) > m) m = abs(b);
    if (abs(c) > m) m = abs(c);
    const BigInt bound = m + 1;

    std::vector<BigInt> breaks{-bound, bound};
    // critical points of the cubic: roots of 3x^2 + 2ax + b
    const BigInt disc = a * a - 3 * b;
    if (sign_of(disc) >= 0) {
        const BigInt s = isqrt_floor(disc);
        for (const BigInt& num : {BigInt(-a - s), BigInt(-a + s)}) {
            BigInt q;
            mpz_fdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), 3);
            for (long off = 0; off <= 1; ++off) {
                BigInt cand = q + off;
                if (cand > -bound && cand < bound) breaks.push_back(cand);
            }
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<BigInt> roots;
    auto note = [&](const BigInt& x) {
        if (sign_of(g(x)) == 0) roots.push_back(x);
    };
    for (const auto& x : breaks) note(x);
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        BigInt lo = breaks[i], hi = breaks[i + 1];
        int slo = sign_of(g(lo)), shi = sign_of(g(hi));
        if (slo == 0 || shi == 0 || slo == shi) continue;
        while (hi - lo > 1) {
            BigInt mid = (lo + hi) / 2;
            const int sm = sign_of(g(mid));
            if (sm == 0) {
                roots.push_back(mid);
                break;
            }
            (sm == slo ? lo : hi) = mid;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<BigInt> integer_roots(const std::vector<BigInt>& coeffs) {
    bool all_zero = true;
    for (const auto& c : coeffs)
        if (sign_of(c) != 0) all_zero = false;
    if (coeffs.empty() || all_zero) throw std::invalid_argument("integer_roots of zero polynomial");
    std::vector<BigRational> qc(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) qc[i] = BigRational(coeffs[i]);
    PolyQ p(std::move(qc));
    std::vector<BigInt> out;
    for (const auto& r : rational_roots(p)) {
        if (r.get_den() != 1) continue;
        BigInt x = r.get_num();
        // verify by substitution
        BigInt acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        if (sign_of(acc) == 0) out.push_back(x);
    }
    return out;
}

}  // namespace ellsolve
