#pragma once

#include "ellsolve/curve.hpp"
#include "ellsolve/quartic.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace ellsolve {

struct SearchBudget {
    BigInt max_uv{200};     // bound on u, v in x = d u^2/v^2 (and numerators in the fallback scan)
    BigInt max_param{200};  // bound on descent parameters p, q and t
    int workers = 1;
    long enumerate_limit = 1;  // |k_i| <= L in generator combinations

    SearchBudget() = default;
    explicit SearchBudget(long uv, long param = 200, int w = 1) : max_uv(uv), max_param(param), workers(w) {}
};

// counts of candidates tested per phase, for CLI progress output
using ProgressHook = std::function<void(const std::string& phase, unsigned long tested)>;

// Enumerates x = d u^2 / v^2 over squarefree d | b for curves
// v^2 = x^3 + a x^2 + b x; other shapes fall back to x = w/v^2 with
// |w| <= max_uv^2 limited through the rhs sign.  Results carry y >= 0, are
// deduplicated and sorted by naive height.
std::vector<PointQ> naive_search(const CurveQ& e, const SearchBudget& budget,
                                 const ProgressHook& hook = nullptr);

struct DescentBranch {
    BigInt d;            // squarefree divisor of b (sign included)
    BigInt alpha, beta;  // a^2 - 4b = alpha beta^2, alpha squarefree
    // solution of F^2 = alpha G^2 + d H^2 seeding the line parameterization
    // (only needed when alpha != 1)
    std::optional<std::array<BigInt, 3>> conic_seed;
};

// One branch per admissible squarefree d | b; negative d omitted when
// a^2 < 4b.  Requires the 2-torsion form with b != 0.
std::vector<DescentBranch> descent_branches(const CurveQ& e, const SearchBudget& budget);

// Conic-parameterized scan over each branch; a superset of naive_search on
// matched budgets for curves in scope.  Branches whose conic has no small
// seed are skipped (reported through the hook).
std::vector<PointQ> descent_search(const CurveQ& e, const SearchBudget& budget,
                                   const ProgressHook& hook = nullptr);

struct DescentQuartic {
    BigInt k;
    std::array<BigRational, 5> c;  // c0..c4: k (c0 t^4 + ... + c4) = square
};

// Second-stage quartics from a first-stage solution (m0, s0) of
// -2 d G0 m^2 + 2 d^2 G0 = k s^2; k runs over squarefree divisors of
// 16 d^4 G0^3 (a^2 - 4b).
std::vector<DescentQuartic> descent_quartics(const CurveQ& e, const DescentBranch& branch,
                                             const BigRational& m0, const BigRational& s0,
                                             const BigInt& k);

// All squarefree k values admissible for the branch.
std::vector<BigInt> descent_quartic_moduli(const CurveQ& e, const DescentBranch& branch);

// x = p/q scan keeping y^2 = q(x) square; pairs (x, y) with y >= 0.
std::vector<std::pair<BigRational, BigRational>> quartic_search(const QuarticModel& q,
                                                                const SearchBudget& budget,
                                                                const ProgressHook& hook = nullptr);

}  // namespace ellsolve
