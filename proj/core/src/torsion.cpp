#include "ellsolve/torsion.hpp"

#include <algorithm>
#include <map>

namespace ellsolve {

PointQ IntegralModel::to_integral(const PointQ& p) const {
    if (p.infinity) return p;
    const BigRational l2(lambda * lambda);
    return PointQ(p.x * l2, p.y * l2 * BigRational(lambda));
}

PointQ IntegralModel::from_integral(const PointQ& p) const {
    if (p.infinity) return p;
    const BigRational l2(lambda * lambda);
    return PointQ(p.x / l2, p.y / (l2 * BigRational(lambda)));
}

IntegralModel integral_model(const CurveQ& e) {
    // lambda = prod p^k with 2k >= ord_p(den a2), 4k >= ord_p(den a4), 6k >= ord_p(den a6)
    std::map<BigInt, unsigned> need;
    auto demand = [&](const BigInt& den, unsigned weight) {
        if (den == 1) return;
        for (const auto& [p, ex] : factorize(den).primes) {
            const unsigned k = (ex + weight - 1) / weight;
            auto& cur = need[p];
            cur = std::max(cur, k);
        }
    };
    demand(e.a2.get_den(), 2);
    demand(e.a4.get_den(), 4);
    demand(e.a6.get_den(), 6);
    BigInt lambda = 1;
    for (const auto& [p, k] : need)
        for (unsigned i = 0; i < k; ++i) lambda *= p;
    IntegralModel m;
    m.lambda = lambda;
    const BigRational l2(lambda * lambda);
    m.curve = CurveQ(e.a2 * l2, e.a4 * l2 * l2, e.a6 * l2 * l2 * l2);
    return m;
}

std::optional<int> point_order(const CurveQ& e, const PointQ& p) {
    if (!on_curve(e, p)) throw CurveError("point " + p.str() + " not on " + e.str());
    if (p.infinity) return 1;
    PointQ acc = p;
    for (int k = 1; k <= 12; ++k) {
        if (acc.infinity) return k;
        acc = add(e, acc, p);
    }
    return std::nullopt;
}

namespace {

std::vector<BigInt> cubic_integer_coeffs(const CurveQ& e) {
    return {e.a6.get_num(), e.a4.get_num(), e.a2.get_num(), BigInt(1)};
}

}  // namespace

TorsionGroup torsion_subgroup(const CurveQ& e) {
    if (is_singular(e)) throw CurveError("torsion of singular curve " + e.str());
    const IntegralModel m = integral_model(e);

    std::vector<PointQ> found{PointQ::inf()};
    auto consider = [&](const PointQ& cand) {
        if (!on_curve(m.curve, cand)) return;
        if (std::find(found.begin(), found.end(), cand) != found.end()) return;
        if (point_order(m.curve, cand)) found.push_back(cand);
    };

    // order 2: integer roots of the cubic
    const BigInt ia2 = m.curve.a2.get_num(), ia4 = m.curve.a4.get_num(),
                 ia6 = m.curve.a6.get_num();
    for (const auto& r : monic_cubic_integer_roots(ia2, ia4, ia6))
        consider(PointQ(BigRational(r), BigRational(0)));

    // y != 0: y^2 | Delta on the integral model
    const BigRational d = discriminant(m.curve);
    const auto sqf = squarefree_decompose(d.get_num());
    for (const auto& y : divisors(sqf.root)) {
        for (const auto& x : monic_cubic_integer_roots(ia2, ia4, ia6 - y * y)) {
            consider(PointQ(BigRational(x), BigRational(y)));
            consider(PointQ(BigRational(x), BigRational(-y)));
        }
    }

    // close under addition (the theorem makes the candidate set complete;
    // closing is cheap and guards the invariant regardless)
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < found.size() && !grew; ++i)
            for (size_t j = i; j < found.size() && !grew; ++j) {
                PointQ s = add(m.curve, found[i], found[j]);
                if (std::find(found.begin(), found.end(), s) == found.end()) {
                    found.push_back(s);
                    grew = true;
                }
            }
    }

    TorsionGroup out;
    for (const auto& p : found) out.points.push_back(m.from_integral(p));
    std::sort(out.points.begin() + 1, out.points.end(), [](const PointQ& a, const PointQ& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });

    int order2 = 0, max_order = 1;
    for (const auto& p : out.points) {
        if (!p.infinity && sign_of(p.y) == 0) ++order2;
        const auto k = point_order(e, p);
        max_order = std::max(max_order, k.value_or(1));
    }
    if (order2 == 3)
        out.structure = "Z/2+Z/" + std::to_string(max_order);
    else
        out.structure = "Z/" + std::to_string(out.points.size());
    return out;
}

}  // namespace ellsolve
