#pragma once

#include "ellsolve/curve.hpp"
#include "ellsolve/exactnum.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ellsolve {

// y^2 = a x^4 + b x^3 + c x^2 + d x + e.  Construction rejects quartics that
// are identically the square of a quadratic; those carry no curve.
struct QuarticModel {
    BigRational a, b, c, d, e;
    std::optional<std::pair<BigRational, BigRational>> known_point;

    QuarticModel(BigRational a_, BigRational b_, BigRational c_, BigRational d_, BigRational e_,
                 std::optional<std::pair<BigRational, BigRational>> pt = std::nullopt);
    BigRational eval(const BigRational& x) const {
        return (((a * x + b) * x + c) * x + d) * x + e;
    }
    std::string str() const;
};

bool is_perfect_square_quartic(const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& d, const BigRational& e);

// Dense bivariate polynomial; c[i][j] multiplies s^i t^j.
struct Poly2 {
    std::vector<std::vector<BigRational>> c;
    static Poly2 zero() { return {}; }
    static Poly2 constant(const BigRational& v);
    BigRational eval(const BigRational& s, const BigRational& t) const;
    std::string str(const std::string& s, const std::string& t) const;
    bool is_zero() const;
};

Poly2 p2_term(const BigRational& v, size_t i, size_t j);  // v * s^i t^j
Poly2 p2_add(const Poly2& a, const Poly2& b);
Poly2 p2_mul(const Poly2& a, const Poly2& b);
Poly2 p2_scale(const Poly2& a, const BigRational& s);

// One coordinate of a rational map: num/den in two input variables.
struct RationalMap2 {
    Poly2 num, den;
    std::string label;  // names the denominator in pole reports
};

// Pole hits are meaningful (they encode torsion and hidden points), so map
// evaluation returns a structured rejection instead of throwing.
struct Rejection {
    std::string reason;
    std::string str() const { return reason; }
};

template <typename T>
using MapOutcome = std::variant<T, Rejection>;

MapOutcome<BigRational> eval_map(const RationalMap2& m, const BigRational& s, const BigRational& t);

enum class MapDirection { forward, reverse };

// Coefficient-level birational correspondence between a quartic y^2 = q(x)
// and a Weierstrass model: forward (x,y) -> (u,v), reverse (u,v) -> (x,y).
struct BirationalMap {
    RationalMap2 fwd_u, fwd_v;  // in variables (x, y)
    RationalMap2 rev_x, rev_y;  // in variables (u, v)
    // where the reverse map blows up: the image of this quartic point is O
    std::optional<std::pair<BigRational, BigRational>> seed;

    MapOutcome<std::pair<BigRational, BigRational>> forward(const BigRational& x,
                                                            const BigRational& y) const;
    MapOutcome<std::pair<BigRational, BigRational>> reverse(const BigRational& u,
                                                            const BigRational& v) const;
};

MapOutcome<std::pair<BigRational, BigRational>> apply_map(
    const BirationalMap& map, MapDirection dir, const std::pair<BigRational, BigRational>& value);

struct QuarticReduction {
    CurveQ curve;
    BirationalMap map;
    PointQ builtin_point;  // infinity when the branch supplies none
    bool singular = false; // flagged, maps still returned
};

// Monic branch: y^2 = x^4 + b x^3 + c x^2 + d x + e goes to
// G^2 = H^3 + 27(3bd - c^2 - 12e) H + 27(27 b^2 e - 9bcd + 2c^3 - 72ce + 27 d^2),
// with a point supplied by the pole of the x-map.
QuarticReduction reduce_monic(const QuarticModel& q);

// Known-point branch: needs (p, q(p)) with y != 0 on the quartic.
QuarticReduction reduce_with_point(const QuarticModel& q,
                                   const std::pair<BigRational, BigRational>& p0);

// b = d = 0 branch: y^2 = a x^4 + c x^2 + e with a a rational square goes to
// F^2 = H (H^2 - 2c H + (c^2 - 4ae)).
QuarticReduction reduce_biquadratic(const BigRational& a, const BigRational& c,
                                    const BigRational& e);

// (X, Y) = (alpha x, alpha y) turns a = alpha^2 into a monic model with
// coefficients (b/alpha, c, alpha d, alpha^2 e).
QuarticModel scale_leading_square(const QuarticModel& q, BigRational* alpha_out = nullptr);

// Picks the applicable branch: monic / square-leading, then biquadratic,
// then known-point.
QuarticReduction reduce_quartic(const QuarticModel& q);

}  // namespace ellsolve
