#pragma once

#include "ellsolve/curve.hpp"
#include "ellsolve/quartic.hpp"  // Rejection / MapOutcome
#include "ellsolve/torsion.hpp"

#include <vector>

namespace ellsolve {

// One kernel point (r, s) together with its summand data.
struct KernelTerm {
    BigRational r, s;
    BigRational t, u;  // t_P = delta * g(r), u_P = 4 s^2
    bool order2 = false;
};

// A single isogeny stage: evaluation through the kernel sums, then the
// normalization U = scale^2 (u + shift), V = scale^3 v that puts the target
// into its published model.
struct IsogenyStage {
    CurveQ source;
    CurveQ raw_target;
    CurveQ target;
    int degree = 1;
    std::vector<KernelTerm> kernel;
    BigRational shift{0};
    BigRational scale{1};

    MapOutcome<PointQ> forward(const PointQ& p) const;
};

struct IsogenyMap {
    std::vector<IsogenyStage> stages;

    const CurveQ& source() const { return stages.front().source; }
    const CurveQ& target() const { return stages.back().target; }
    int degree() const;

    MapOutcome<PointQ> forward(const PointQ& p) const;
};

// Target curve of the subset construction: T* holds every point of order 2
// plus one point from each +-pair of the kernel.  Infinity or non-torsion
// members are rejected.
CurveQ velu(const CurveQ& e, const std::vector<PointQ>& kernel_halfset);

// Same data as a map (raw model, no normalization).
IsogenyMap velu_map(const CurveQ& e, const std::vector<PointQ>& kernel_halfset);

// v^2 = x^3 + a x^2 + b x  ->  v^2 = h^3 - 2a h^2 + (a^2 - 4b) h
// via h = y^2/x^2, v = y (x^2 - b)/x^2.
IsogenyMap isogeny2(const CurveQ& e);

// y^2 = x^3 + (a x + b)^2  ->  g^2 = h^3 - 27 (a h + 27b - 4a^3)^2
// via h = 3(3x^3 + 4a^2 x^2 + 12ab x + 12 b^2)/x^2.
IsogenyMap isogeny3(const CurveQ& e);

// y^2 = x^3 + (a^2 + 2b) x^2 + b^2 x  ->  v^2 = h^3 + 2(4b - a^2) h^2 + (a^2 + 4b)^2 h
// with kernel {(0,0), (-b, +-ab)}.
IsogenyMap isogeny4(const CurveQ& e);

// Degree-1 map (empty kernel); useful as a coordinate shift in chains.
IsogenyMap identity_isogeny(const CurveQ& e);

// Chains maps; throws CurveError when the models do not line up.
IsogenyMap compose(const std::vector<IsogenyMap>& maps);

// Post-transforms on the final target model.
void shift_target(IsogenyMap& m, const BigRational& delta);  // U -> U + delta
void scale_target(IsogenyMap& m, const BigRational& mu);     // U -> mu^2 U, V -> mu^3 V

// Multiply-then-solve: returns every source point P with
// forward(P) = degree * q, in deterministic order; empty when the forward
// equation has no rational root at this multiple.
std::vector<PointQ> pull_back(const IsogenyMap& m, const PointQ& q);

}  // namespace ellsolve
