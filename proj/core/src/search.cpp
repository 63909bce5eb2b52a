#include "ellsolve/search.hpp"

#include "ellsolve/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace ellsolve {

namespace {

void sort_points(std::vector<PointQ>& pts) {
    std::sort(pts.begin(), pts.end(), [](const PointQ& a, const PointQ& b) {
        const BigInt ha = naive_height(a), hb = naive_height(b);
        if (ha != hb) return ha < hb;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// run fn(worker_index) on `workers` threads, collecting point vectors
std::vector<PointQ> fan_out(int workers, const std::function<std::vector<PointQ>(int)>& fn) {
    if (workers <= 1) return fn(0);
    std::vector<std::vector<PointQ>> parts(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] { parts[w] = fn(w); });
    for (auto& t : threads) t.join();
    std::vector<PointQ> all;
    for (auto& part : parts)
        for (auto& p : part) all.push_back(std::move(p));
    return all;
}

bool curve_has_two_torsion_form(const CurveQ& e) {
    return sign_of(e.a6) == 0 && sign_of(e.a4) != 0;
}

std::vector<BigInt> signed_squarefree_divisors(const BigInt& n, bool include_negative) {
    std::vector<BigInt> ds;
    for (const auto& d : squarefree_divisors(n)) {
        ds.push_back(d);
        if (include_negative) ds.push_back(-d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// x = d u^2/v^2 scan on the integral 2-torsion model
std::vector<PointQ> structured_scan(const CurveQ& e, const SearchBudget& budget,
                                    const ProgressHook& hook) {
    const BigInt a = e.a2.get_num(), b = e.a4.get_num();
    const bool neg_ok = a * a >= 4 * b;
    const auto dvals = signed_squarefree_divisors(b, neg_ok);
    const long U = budget.max_uv.get_si();

    auto worker = [&](int w) {
        std::vector<PointQ> found;
        unsigned long tested = 0;
        if (w == 0) found.push_back(PointQ(BigRational(0), BigRational(0)));  // u = 0
        for (const auto& d : dvals) {
            for (long v = 1; v <= U; ++v) {
                BigInt gv;
                mpz_gcd(gv.get_mpz_t(), d.get_mpz_t(), BigInt(v).get_mpz_t());
                if (gv != 1) continue;
                const BigInt v2 = BigInt(v) * v;
                const BigInt bv4 = b * v2 * v2;
                const BigInt adv2 = a * d * v2;
                for (long u = (w + 1); u <= U; u += std::max(1, budget.workers)) {
                    if (std::gcd(u, v) != 1) continue;
                    ++tested;
                    const BigInt u2 = BigInt(u) * u;
                    // d w^2 = d^2 u^4 + a d u^2 v^2 + b v^4
                    const BigInt s = ((d * d * u2 + adv2) * u2) + bv4;
                    if (!mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t())) continue;
                    const auto wroot = exact_sqrt(s / d);
                    if (!wroot) continue;
                    const BigRational x = make_rational(d * u2, v2);
                    const BigRational y = make_rational(d * u * *wroot, v2 * v);
                    found.push_back(PointQ(x, abs(y)));
                }
            }
        }
        if (hook) hook("naive/structured", tested);
        return found;
    };
    return fan_out(budget.workers, worker);
}

// x = w/v^2 fallback, pruned to where the cubic is nonnegative
std::vector<PointQ> fallback_scan(const CurveQ& e, const SearchBudget& budget,
                                  const ProgressHook& hook) {
    const long W = budget.max_uv.get_si();
    long vmax = 1;
    while ((vmax + 1) * (vmax + 1) <= W) ++vmax;

    // nonnegativity windows of the cubic, as rational brackets
    auto iso = isolate_real_roots(e.rhs_poly());
    std::vector<BigRational> marks = iso.exact;
    for (const auto& [lo, hi] : iso.intervals) {
        marks.push_back(lo);
        marks.push_back(hi);
    }
    std::sort(marks.begin(), marks.end());
    const BigRational lo_mark = marks.empty() ? BigRational(-W) : marks.front();

    auto worker = [&](int wk) {
        std::vector<PointQ> found;
        unsigned long tested = 0;
        for (long v = 1; v <= vmax; ++v) {
            const BigInt v2 = BigInt(v) * v;
            BigRational wlow = lo_mark * BigRational(v2) - 1;
            BigInt start;
            mpz_fdiv_q(start.get_mpz_t(), wlow.get_num().get_mpz_t(), wlow.get_den().get_mpz_t());
            if (start < -BigInt(W)) start = -BigInt(W);
            for (BigInt w = start + wk; w <= W; w += std::max(1, budget.workers)) {
                BigInt g;
                mpz_gcd(g.get_mpz_t(), w.get_mpz_t(), v2.get_mpz_t());
                if (g != 1) continue;
                ++tested;
                const BigRational x = make_rational(w, v2);
                const BigRational fx = e.rhs(x);
                if (sign_of(fx) < 0) continue;
                if (const auto y = rational_square_root(fx)) found.push_back(PointQ(x, *y));
            }
        }
        if (hook) hook("naive/fallback", tested);
        return found;
    };
    return fan_out(budget.workers, worker);
}

}  // namespace

std::vector<PointQ> naive_search(const CurveQ& e, const SearchBudget& budget,
                                 const ProgressHook& hook) {
    if (is_singular(e)) throw CurveError("search on singular curve " + e.str());
    const IntegralModel m = integral_model(e);
    std::vector<PointQ> pts = curve_has_two_torsion_form(m.curve)
                                  ? structured_scan(m.curve, budget, hook)
                                  : fallback_scan(m.curve, budget, hook);
    for (auto& p : pts) p = m.from_integral(p);
    for (const auto& p : pts)
        if (!on_curve(e, p)) throw CurveError("search emitted off-curve point " + p.str());
    sort_points(pts);
    return pts;
}

std::vector<DescentBranch> descent_branches(const CurveQ& e, const SearchBudget& budget) {
    if (is_singular(e)) throw CurveError("descent on singular curve " + e.str());
    const IntegralModel m = integral_model(e);
    if (!curve_has_two_torsion_form(m.curve))
        throw CurveError("descent needs the form v^2 = x^3 + a x^2 + b x with b != 0");
    const BigInt a = m.curve.a2.get_num(), b = m.curve.a4.get_num();
    const BigInt disc = a * a - 4 * b;
    const auto sf = squarefree_decompose(disc);

    std::vector<DescentBranch> out;
    const bool neg_ok = sign_of(disc) >= 0;
    const long seed_bound = std::min(200L, budget.max_param.get_si());
    for (const auto& d : signed_squarefree_divisors(b, neg_ok)) {
        DescentBranch br;
        br.d = d;
        br.alpha = sf.squarefree;
        br.beta = sf.root;
        if (br.alpha != 1) {
            // small scan for F^2 = alpha G^2 + d H^2 with G > 0
            for (long gg = 1; gg <= seed_bound && !br.conic_seed; ++gg)
                for (long hh = 0; hh <= seed_bound && !br.conic_seed; ++hh) {
                    const BigInt t = br.alpha * gg * gg + d * hh * hh;
                    if (const auto f = exact_sqrt(t))
                        br.conic_seed = std::array<BigInt, 3>{*f, BigInt(gg), BigInt(hh)};
                }
        } else {
            br.conic_seed = std::array<BigInt, 3>{BigInt(1), BigInt(1), BigInt(0)};
        }
        out.push_back(std::move(br));
    }
    return out;
}

namespace {

// emit the point for x = d * (u/v)^2 if it lies on the curve
void try_x(const CurveQ& e, const BigRational& x, std::vector<PointQ>& found) {
    const BigRational fx = e.rhs(x);
    if (sign_of(fx) < 0) return;
    if (const auto y = rational_square_root(fx)) found.push_back(PointQ(x, *y));
}

}  // namespace

std::vector<PointQ> descent_search(const CurveQ& e, const SearchBudget& budget,
                                   const ProgressHook& hook) {
    const IntegralModel m = integral_model(e);
    const auto branches = descent_branches(e, budget);
    const BigInt a = m.curve.a2.get_num();
    const long P = budget.max_param.get_si();

    auto worker = [&](int wk) {
        std::vector<PointQ> found;
        unsigned long tested = 0;
        for (const auto& br : branches) {
            if (!br.conic_seed) {
                if (hook && wk == 0) hook("descent/skipped d=" + br.d.get_str(), 0);
                continue;
            }
            const BigRational d(br.d), alpha(br.alpha), beta(br.beta), A(a);
            if (br.alpha == 1) {
                // F = p^2 + d q^2, G = p^2 - d q^2: x/d = (beta F - a G)/(2 d G)
                for (long p = wk; p <= P; p += std::max(1, budget.workers))
                    for (long q = 0; q <= P; ++q) {
                        if (p == 0 && q == 0) continue;
                        if (std::gcd(p, q) != 1) continue;
                        ++tested;
                        const BigRational p2(BigInt(p) * p), q2(BigInt(q) * q);
                        const BigRational F = p2 + d * q2, G = p2 - d * q2;
                        if (sign_of(G) == 0) continue;
                        const BigRational X = (beta * F - A * G) / (BigRational(2) * d * G);
                        if (sign_of(X) < 0) continue;
                        if (!is_square(X.get_num()) || !is_square(X.get_den())) continue;
                        try_x(m.curve, d * X, found);
                    }
            } else {
                const auto& [F0, G0, H0] = *br.conic_seed;
                const BigRational f0(F0), g0(G0), h0(H0);
                for (long p = -P + wk; p <= P; p += std::max(1, budget.workers))
                    for (long q = 1; q <= P; ++q) {
                        if (std::gcd(std::abs(p), q) != 1) continue;
                        ++tested;
                        const BigRational mm = make_rational(p, q);
                        const BigRational num = (A * f0 + beta * g0) * mm * mm -
                                                BigRational(2) * beta * d * h0 * mm +
                                                d * (beta * f0 - A * g0);
                        const BigRational den = BigRational(2) * d * g0 * (d - mm * mm);
                        if (sign_of(den) == 0) continue;
                        const BigRational X = num / den;
                        if (sign_of(X) < 0) continue;
                        if (!is_square(X.get_num()) || !is_square(X.get_den())) continue;
                        try_x(m.curve, d * X, found);
                    }
            }
            if (hook && wk == 0) hook("descent d=" + br.d.get_str(), tested);
        }
        return found;
    };

    std::vector<PointQ> pts = fan_out(budget.workers, worker);
    for (auto& p : pts) p = m.from_integral(p);
    // the direct u,v enumeration rides along so that the descent output is a
    // strict superset of the naive one at equal budgets
    for (auto& p : naive_search(e, budget, hook)) pts.push_back(std::move(p));
    for (const auto& p : pts)
        if (!on_curve(e, p)) throw CurveError("descent emitted off-curve point " + p.str());
    sort_points(pts);
    return pts;
}

std::vector<BigInt> descent_quartic_moduli(const CurveQ& e, const DescentBranch& branch) {
    const IntegralModel m = integral_model(e);
    const BigInt a = m.curve.a2.get_num(), b = m.curve.a4.get_num();
    if (!branch.conic_seed) return {};
    const BigInt g0 = (*branch.conic_seed)[1];
    const BigInt bound = 16 * branch.d * branch.d * branch.d * branch.d * g0 * g0 * g0 *
                         (a * a - 4 * b);
    return signed_squarefree_divisors(bound, true);
}

std::vector<DescentQuartic> descent_quartics(const CurveQ& e, const DescentBranch& branch,
                                             const BigRational& m0, const BigRational& s0,
                                             const BigInt& k) {
    if (!branch.conic_seed) throw CurveError("branch carries no conic seed");
    const IntegralModel mi = integral_model(e);
    const BigRational a(mi.curve.a2), d(branch.d), beta(branch.beta), kk(k);
    const auto& [F0i, G0i, H0i] = *branch.conic_seed;
    const BigRational F0(F0i), G0(G0i), H0(H0i);
    // first-stage constraint: -2 d G0 m0^2 + 2 d^2 G0 = k s0^2
    if (BigRational(-2) * d * G0 * m0 * m0 + BigRational(2) * d * d * G0 != kk * s0 * s0)
        throw CurveError("(m0, s0) does not satisfy the first-stage quadratic for this k");

    DescentQuartic q;
    q.k = k;
    q.c[0] = kk * kk *
             (beta * (d * (F0 - BigRational(2) * H0 * m0) + G0 * m0 * m0) -
              a * (d * G0 - F0 * m0 * m0));
    q.c[1] = BigRational(-4) * kk * kk * s0 * (a * F0 * m0 + beta * (G0 * m0 - d * H0));
    q.c[2] = BigRational(4) * kk *
             (beta * G0 * (d * d * F0 - d * G0 * m0 * m0 + kk * s0 * s0) -
              a * (d * d * G0 * G0 + d * F0 * G0 * m0 * m0 - F0 * kk * s0 * s0));
    q.c[3] = BigRational(8) * d * G0 * kk * s0 * (a * F0 * m0 + beta * (d * H0 + G0 * m0));
    q.c[4] = BigRational(4) * d * d * G0 * G0 *
             (beta * (d * (F0 + BigRational(2) * H0 * m0) + G0 * m0 * m0) -
              a * (d * G0 - F0 * m0 * m0));
    return {q};
}

std::vector<std::pair<BigRational, BigRational>> quartic_search(const QuarticModel& q,
                                                                const SearchBudget& budget,
                                                                const ProgressHook& hook) {
    const long P = budget.max_param.get_si();
    std::vector<std::pair<BigRational, BigRational>> found;
    unsigned long tested = 0;
    for (long den = 1; den <= P; ++den)
        for (long num = -P; num <= P; ++num) {
            if (std::gcd(std::abs(num), den) != 1) continue;
            ++tested;
            const BigRational x = make_rational(num, den);
            const BigRational val = q.eval(x);
            if (sign_of(val) < 0) continue;
            if (const auto y = rational_square_root(val)) found.emplace_back(x, *y);
        }
    if (hook) hook("quartic", tested);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        const BigInt ha = std::max(BigInt(abs(a.first.get_num())), BigInt(a.first.get_den()));
        const BigInt hb = std::max(BigInt(abs(b.first.get_num())), BigInt(b.first.get_den()));
        if (ha != hb) return ha < hb;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace ellsolve
