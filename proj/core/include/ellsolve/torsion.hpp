#pragma once

#include "ellsolve/curve.hpp"

#include <optional>
#include <vector>

namespace ellsolve {

// u = U/lambda^2, v = V/lambda^3 clears all denominators with minimal lambda.
struct IntegralModel {
    CurveQ curve;     // integer coefficients
    BigInt lambda;    // >= 1
    PointQ to_integral(const PointQ& p) const;
    PointQ from_integral(const PointQ& p) const;
};

IntegralModel integral_model(const CurveQ& e);

struct TorsionGroup {
    std::vector<PointQ> points;  // the full finite subgroup, infinity first
    std::string structure;       // "Z/1".."Z/12" or "Z/2+Z/2n"
    size_t order() const { return points.size(); }
};

// Nagell-Lutz enumeration on the integral model: order-2 points from integer
// roots of the cubic, the rest from integer y with y^2 dividing the
// discriminant; a candidate survives iff some k <= 12 kills it.
TorsionGroup torsion_subgroup(const CurveQ& e);

// Smallest k <= 12 with kP = O; nullopt means infinite order (Mazur).
std::optional<int> point_order(const CurveQ& e, const PointQ& p);

}  // namespace ellsolve
