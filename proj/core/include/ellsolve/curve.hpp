#pragma once

#include "ellsolve/exactnum.hpp"
#include "ellsolve/poly.hpp"

#include <string>

namespace ellsolve {

class CurveError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Weierstrass model v^2 = u^3 + a2*u^2 + a4*u + a6 over Q.
struct CurveQ {
    BigRational a2, a4, a6;

    CurveQ() = default;
    CurveQ(BigRational a2_, BigRational a4_, BigRational a6_)
        : a2(std::move(a2_)), a4(std::move(a4_)), a6(std::move(a6_)) {}

    BigRational rhs(const BigRational& u) const { return ((u + a2) * u + a4) * u + a6; }
    PolyQ rhs_poly() const { return PolyQ({a6, a4, a2, BigRational(1)}); }
    bool operator==(const CurveQ&) const = default;
    std::string str() const;
};

struct PointQ {
    bool infinity = true;
    BigRational x, y;

    PointQ() = default;
    PointQ(BigRational x_, BigRational y_) : infinity(false), x(std::move(x_)), y(std::move(y_)) {}
    static PointQ inf() { return PointQ(); }
    bool operator==(const PointQ&) const = default;
    std::string str() const;
};

// max(|num x|, |den x|); ordering metric only.
BigInt naive_height(const PointQ& p);

bool on_curve(const CurveQ& e, const PointQ& p);

// 16 * disc(u^3 + a2 u^2 + a4 u + a6) -- the normalization under which the
// closed forms for the problem families come out exactly.
BigRational discriminant(const CurveQ& e);
bool is_singular(const CurveQ& e);

PointQ negate(const CurveQ& e, const PointQ& p);
PointQ add(const CurveQ& e, const PointQ& p, const PointQ& q);
PointQ multiply(const CurveQ& e, const BigInt& k, const PointQ& p);

// For curves v^2 = w^3 + A w^2 + B w: the x-coordinate of 2P equals
// (p^2 - B)^2 / (4 q^2), a square whenever P = (p, q), q != 0.
BigRational doubling_x_square_rule(const CurveQ& e, const PointQ& p);

int real_components(const CurveQ& e);  // 1 or 2

enum class Component { egg, infinite };
Component component_of(const CurveQ& e, const PointQ& p);

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct GeneralCurveQ {
    BigRational a1, a2, a3, a4, a6;
};

struct GeneralPointQ {
    bool infinity = true;
    BigRational x, y;
    GeneralPointQ() = default;
    GeneralPointQ(BigRational x_, BigRational y_)
        : infinity(false), x(std::move(x_)), y(std::move(y_)) {}
};

// Completing-the-square chain: u = 4x, v = 4(2y + a1 x + a3) lands on
// v^2 = u^3 + (4a2+a1^2) u^2 + 4(4a4+2a1a3) u + 16(4a6+a3^2).
struct SimplifiedModel {
    CurveQ curve;
    GeneralCurveQ source;
    PointQ forward(const GeneralPointQ& p) const;
    GeneralPointQ backward(const PointQ& p) const;
};

SimplifiedModel simplify(const GeneralCurveQ& e);

// True when the two short models are related by u' = s^2 * u + r with
// rational s, r (same abstract curve presented at a different scale/origin).
bool isomorphic_simple(const CurveQ& a, const CurveQ& b);

}  // namespace ellsolve
