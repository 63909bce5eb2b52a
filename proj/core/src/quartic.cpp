#include "ellsolve/quartic.hpp"

#include <algorithm>

namespace ellsolve {

Poly2 p2_term(const BigRational& v, size_t i, size_t j) {
    Poly2 p;
    if (sign_of(v) == 0) return p;
    p.c.assign(i + 1, {});
    p.c[i].assign(j + 1, BigRational(0));
    p.c[i][j] = v;
    return p;
}

Poly2 p2_add(const Poly2& a, const Poly2& b) {
    Poly2 out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < out.c.size(); ++i) {
        const size_t na = i < a.c.size() ? a.c[i].size() : 0;
        const size_t nb = i < b.c.size() ? b.c[i].size() : 0;
        out.c[i].assign(std::max(na, nb), BigRational(0));
        for (size_t j = 0; j < na; ++j) out.c[i][j] += a.c[i][j];
        for (size_t j = 0; j < nb; ++j) out.c[i][j] += b.c[i][j];
    }
    return out;
}

Poly2 p2_mul(const Poly2& a, const Poly2& b) {
    Poly2 out;
    if (a.c.empty() || b.c.empty()) return out;
    size_t da = 0, db = 0;
    for (const auto& row : a.c) da = std::max(da, row.size());
    for (const auto& row : b.c) db = std::max(db, row.size());
    if (da == 0 || db == 0) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, {});
    for (auto& row : out.c) row.assign(da + db - 1, BigRational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < a.c[i].size(); ++j) {
            if (sign_of(a.c[i][j]) == 0) continue;
            for (size_t k = 0; k < b.c.size(); ++k)
                for (size_t l = 0; l < b.c[k].size(); ++l)
                    out.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
        }
    return out;
}

Poly2 p2_scale(const Poly2& a, const BigRational& s) {
    Poly2 out = a;
    for (auto& row : out.c)
        for (auto& v : row) v *= s;
    return out;
}

bool Poly2::is_zero() const {
    for (const auto& row : c)
        for (const auto& v : row)
            if (sign_of(v) != 0) return false;
    return true;
}

namespace {

// substitute s -> alpha*s, t -> alpha*t
Poly2 p2_stretch(const Poly2& a, const BigRational& alpha) {
    Poly2 out = a;
    BigRational pi(1);
    for (size_t i = 0; i < out.c.size(); ++i) {
        BigRational pj = pi;
        for (size_t j = 0; j < out.c[i].size(); ++j) {
            out.c[i][j] *= pj;
            pj *= alpha;
        }
        pi *= alpha;
    }
    return out;
}

}  // namespace

Poly2 Poly2::constant(const BigRational& v) { return p2_term(v, 0, 0); }

BigRational Poly2::eval(const BigRational& s, const BigRational& t) const {
    BigRational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        BigRational row(0);
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * t + *jt;
        acc = acc * s + row;
    }
    return acc;
}

std::string Poly2::str(const std::string& s, const std::string& t) const {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j) {
            const auto& v = c[i][j];
            if (sign_of(v) == 0) continue;
            if (!out.empty()) out += sign_of(v) > 0 ? " + " : " - ";
            else if (sign_of(v) < 0) out += "-";
            const BigRational av = abs(v);
            std::string mono;
            if (i) mono += s + (i > 1 ? "^" + std::to_string(i) : "");
            if (j) mono += (mono.empty() ? "" : "*") + t + (j > 1 ? "^" + std::to_string(j) : "");
            if (mono.empty() || av != 1) out += rat_str(av);
            if (!mono.empty() && av != 1) out += "*";
            out += mono;
        }
    return out.empty() ? "0" : out;
}

MapOutcome<BigRational> eval_map(const RationalMap2& m, const BigRational& s,
                                 const BigRational& t) {
    const BigRational den = m.den.eval(s, t);
    if (sign_of(den) == 0)
        return Rejection{"pole: " + (m.label.empty() ? std::string("denominator") : m.label) +
                         " vanishes at (" + rat_str(s) + ", " + rat_str(t) + ")"};
    return m.num.eval(s, t) / den;
}

MapOutcome<std::pair<BigRational, BigRational>> BirationalMap::forward(
    const BigRational& x, const BigRational& y) const {
    const auto u = eval_map(fwd_u, x, y);
    if (std::holds_alternative<Rejection>(u)) return std::get<Rejection>(u);
    const auto v = eval_map(fwd_v, x, y);
    if (std::holds_alternative<Rejection>(v)) return std::get<Rejection>(v);
    return std::make_pair(std::get<BigRational>(u), std::get<BigRational>(v));
}

MapOutcome<std::pair<BigRational, BigRational>> BirationalMap::reverse(
    const BigRational& u, const BigRational& v) const {
    const auto x = eval_map(rev_x, u, v);
    if (std::holds_alternative<Rejection>(x)) return std::get<Rejection>(x);
    const auto y = eval_map(rev_y, u, v);
    if (std::holds_alternative<Rejection>(y)) return std::get<Rejection>(y);
    return std::make_pair(std::get<BigRational>(x), std::get<BigRational>(y));
}

MapOutcome<std::pair<BigRational, BigRational>> apply_map(
    const BirationalMap& map, MapDirection dir, const std::pair<BigRational, BigRational>& value) {
    return dir == MapDirection::forward ? map.forward(value.first, value.second)
                                        : map.reverse(value.first, value.second);
}

bool is_perfect_square_quartic(const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& d, const BigRational& e) {
    // (alpha x^2 + beta x + gamma)^2 ?
    const auto alpha = rational_square_root(a);
    if (!alpha) return false;
    if (sign_of(*alpha) == 0) {
        if (sign_of(b) != 0) return false;
        const auto beta = rational_square_root(c);
        if (!beta) return false;
        if (sign_of(*beta) == 0) return sign_of(d) == 0 && is_rational_square(e);
        const BigRational gamma = d / (BigRational(2) * *beta);
        return gamma * gamma == e;
    }
    const BigRational beta = b / (BigRational(2) * *alpha);
    const BigRational gamma = (c - beta * beta) / (BigRational(2) * *alpha);
    return d == BigRational(2) * beta * gamma && e == gamma * gamma;
}

QuarticModel::QuarticModel(BigRational a_, BigRational b_, BigRational c_, BigRational d_,
                           BigRational e_, std::optional<std::pair<BigRational, BigRational>> pt)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), e(std::move(e_)),
      known_point(std::move(pt)) {
    if (is_perfect_square_quartic(a, b, c, d, e))
        throw std::invalid_argument("quartic is identically a perfect square");
    if (known_point) {
        const auto& [px, py] = *known_point;
        if (py * py != eval(px)) throw std::invalid_argument("known point not on quartic");
    }
}

std::string QuarticModel::str() const {
    PolyQ p({e, d, c, b, a});
    return "y^2 = " + p.str("x");
}

QuarticReduction reduce_monic(const QuarticModel& q) {
    if (q.a != 1) throw std::invalid_argument("reduce_monic needs a = 1 (scale first)");
    const BigRational &b = q.b, &c = q.c, &d = q.d, &e = q.e;
    QuarticReduction out;
    out.curve = CurveQ(BigRational(0),
                       BigRational(27) * (BigRational(3) * b * d - c * c - BigRational(12) * e),
                       BigRational(27) * (BigRational(27) * b * b * e - BigRational(9) * b * c * d +
                                          BigRational(2) * c * c * c - BigRational(72) * c * e +
                                          BigRational(27) * d * d));
    out.singular = is_singular(out.curve);

    // forward: H = 18x^2 + 9bx + 3c - 18y,  G = 27(q'(x) - (4x + b) y)
    Poly2 H = p2_add(p2_add(p2_term(BigRational(18), 2, 0), p2_term(BigRational(9) * b, 1, 0)),
                     p2_add(p2_term(BigRational(3) * c, 0, 0), p2_term(BigRational(-18), 0, 1)));
    Poly2 G = p2_add(
        p2_add(p2_term(BigRational(108), 3, 0), p2_term(BigRational(81) * b, 2, 0)),
        p2_add(p2_add(p2_term(BigRational(54) * c, 1, 0), p2_term(BigRational(27) * d, 0, 0)),
               p2_add(p2_term(BigRational(-108), 1, 1), p2_term(BigRational(-27) * b, 0, 1))));
    out.map.fwd_u = {H, Poly2::constant(BigRational(1)), "forward u"};
    out.map.fwd_v = {G, Poly2::constant(BigRational(1)), "forward v"};

    // reverse: x = (2G - 3bH + 9(bc - 6d)) / (12H - 9(3b^2 - 8c)),
    //          y = (18x^2 + 9bx + 3c - H)/18 as one fraction over the x-denominator^2
    Poly2 Nx = p2_add(p2_add(p2_term(BigRational(2), 0, 1), p2_term(BigRational(-3) * b, 1, 0)),
                      p2_term(BigRational(9) * (b * c - BigRational(6) * d), 0, 0));
    Poly2 Dx = p2_add(p2_term(BigRational(12), 1, 0),
                      p2_term(BigRational(-9) * (BigRational(3) * b * b - BigRational(8) * c), 0, 0));
    out.map.rev_x = {Nx, Dx, "reverse x"};
    Poly2 Ny = p2_add(
        p2_add(p2_scale(p2_mul(Nx, Nx), BigRational(18)), p2_scale(p2_mul(Nx, Dx), BigRational(9) * b)),
        p2_mul(p2_add(p2_term(BigRational(3) * c, 0, 0), p2_term(BigRational(-1), 1, 0)),
               p2_mul(Dx, Dx)));
    out.map.rev_y = {Ny, p2_scale(p2_mul(Dx, Dx), BigRational(18)), "reverse y"};

    const BigRational H0 = BigRational(3) * (BigRational(3) * b * b - BigRational(8) * c) / 4;
    const BigRational G0 =
        BigRational(27) * (b * b * b - BigRational(4) * b * c + BigRational(8) * d) / 8;
    out.builtin_point = PointQ(H0, G0);
    return out;
}

QuarticReduction reduce_with_point(const QuarticModel& q,
                                   const std::pair<BigRational, BigRational>& p0) {
    const auto& [p, y0] = p0;
    if (y0 * y0 != q.eval(p)) throw std::invalid_argument("point not on quartic");
    if (sign_of(y0) == 0)
        throw std::invalid_argument(
            "use shifted reduction: seed with y = 0 (shift so the root sits at nonzero y, or "
            "treat the root as 2-torsion directly)");
    const BigRational f = BigRational(4) * q.a * p * p * p + BigRational(3) * q.b * p * p +
                          BigRational(2) * q.c * p + q.d;
    const BigRational g = y0 * y0 * (BigRational(6) * q.a * p * p + BigRational(3) * q.b * p + q.c);
    const BigRational h = y0 * y0 * y0 * y0 * (BigRational(4) * q.a * p + q.b);
    const BigRational k = q.a * y0 * y0 * y0 * y0 * y0 * y0;
    const BigRational m = f / 2;
    const BigRational n = (BigRational(4) * g - f * f) / 8;
    const BigRational s = (f * f * f - BigRational(4) * f * g + BigRational(8) * h) / 8;
    const BigRational t =
        -(f * f * f * f - BigRational(8) * f * f * g + BigRational(16) * (g * g - BigRational(4) * k)) /
        64;

    QuarticReduction out;
    out.curve = CurveQ(m * m - BigRational(4) * n, BigRational(2) * m * s - BigRational(4) * t,
                       s * s);
    out.singular = is_singular(out.curve);

    // z = 1/(x - p), u = y0^2 z, v = y y0^3 z^2, Z = v + u^2 + m u + n,
    // X = 2Z, G = (4u + 2m) Z + s.
    const BigRational q2 = y0 * y0, q3 = q2 * y0, q4 = q2 * q2;
    // x - p as Poly2 in (x, y)
    Poly2 xp = p2_add(p2_term(BigRational(1), 1, 0), p2_term(-p, 0, 0));
    Poly2 xp2 = p2_mul(xp, xp);
    // Znum = y*q3 + q4 + m q2 (x-p) + n (x-p)^2   over (x-p)^2
    Poly2 Znum = p2_add(p2_add(p2_term(q3, 0, 1), p2_term(q4, 0, 0)),
                        p2_add(p2_scale(xp, m * q2), p2_scale(xp2, n)));
    out.map.fwd_u = {p2_scale(Znum, BigRational(2)), xp2, "forward u"};
    // G = ((4 q2 + 2m (x-p)) * Znum + s (x-p)^3) / (x-p)^3
    Poly2 lin = p2_add(p2_term(BigRational(4) * q2, 0, 0), p2_scale(xp, BigRational(2) * m));
    Poly2 Gnum = p2_add(p2_mul(lin, Znum), p2_scale(p2_mul(xp2, xp), s));
    out.map.fwd_v = {Gnum, p2_mul(xp2, xp), "forward v"};

    // reverse, with Y = G - s - m X:
    //   x = (p Y + 2 y0^2 X) / Y
    //   y = y0 (2X^3 - Y^2 - 2 m X Y - 4 n X^2) / Y^2
    Poly2 Y = p2_add(p2_term(BigRational(1), 0, 1),
                     p2_add(p2_term(-s, 0, 0), p2_term(-m, 1, 0)));
    Poly2 rxn = p2_add(p2_scale(Y, p), p2_term(BigRational(2) * q2, 1, 0));
    out.map.rev_x = {rxn, Y, "reverse x"};
    Poly2 ryn = p2_add(
        p2_add(p2_term(BigRational(2), 3, 0), p2_scale(p2_mul(Y, Y), BigRational(-1))),
        p2_add(p2_scale(p2_mul(p2_term(BigRational(1), 1, 0), Y), BigRational(-2) * m),
               p2_term(BigRational(-4) * n, 2, 0)));
    out.map.rev_y = {p2_scale(ryn, y0), p2_mul(Y, Y), "reverse y"};
    out.map.seed = p0;
    out.builtin_point = PointQ(BigRational(0), s);
    return out;
}

QuarticReduction reduce_biquadratic(const BigRational& a, const BigRational& c,
                                    const BigRational& e) {
    if (c * c == BigRational(4) * a * e)
        throw std::invalid_argument("degenerate biquadratic: c^2 = 4ae gives a perfect square");
    const auto alpha = rational_square_root(a);
    if (!alpha || sign_of(*alpha) == 0)
        throw std::invalid_argument(
            "biquadratic reduction needs a square leading coefficient; use reduce_with_point");
    QuarticReduction out;
    out.curve = CurveQ(BigRational(-2) * c, c * c - BigRational(4) * a * e, BigRational(0));
    out.singular = is_singular(out.curve);

    // forward: H = 2 a x^2 + c - 2 alpha y,  F = 2 alpha x H
    Poly2 H = p2_add(p2_add(p2_term(BigRational(2) * a, 2, 0), p2_term(c, 0, 0)),
                     p2_term(BigRational(-2) * *alpha, 0, 1));
    out.map.fwd_u = {H, Poly2::constant(BigRational(1)), "forward u"};
    out.map.fwd_v = {p2_scale(p2_mul(p2_term(BigRational(1), 1, 0), H), BigRational(2) * *alpha),
                     Poly2::constant(BigRational(1)), "forward v"};

    // reverse: x = F / (2 alpha H),  y = (F^2 + 2 c H^2 - 2 H^3) / (4 alpha H^2)
    out.map.rev_x = {p2_term(BigRational(1), 0, 1), p2_term(BigRational(2) * *alpha, 1, 0),
                     "reverse x"};
    Poly2 ryn = p2_add(p2_term(BigRational(1), 0, 2),
                       p2_add(p2_term(BigRational(2) * c, 2, 0), p2_term(BigRational(-2), 3, 0)));
    out.map.rev_y = {ryn, p2_term(BigRational(4) * *alpha, 2, 0), "reverse y"};
    out.builtin_point = PointQ(BigRational(0), BigRational(0));
    return out;
}

QuarticModel scale_leading_square(const QuarticModel& q, BigRational* alpha_out) {
    const auto alpha = rational_square_root(q.a);
    if (!alpha || sign_of(*alpha) == 0)
        throw std::invalid_argument("leading coefficient is not a nonzero rational square");
    if (alpha_out) *alpha_out = *alpha;
    std::optional<std::pair<BigRational, BigRational>> pt;
    if (q.known_point) pt = std::make_pair(*alpha * q.known_point->first, *alpha * q.known_point->second);
    return QuarticModel(BigRational(1), q.b / *alpha, q.c, *alpha * q.d, q.a * q.e, pt);
}

QuarticReduction reduce_quartic(const QuarticModel& q) {
    if (sign_of(q.b) == 0 && sign_of(q.d) == 0 && is_rational_square(q.a) && sign_of(q.a) != 0)
        return reduce_biquadratic(q.a, q.c, q.e);
    if (q.a == 1) return reduce_monic(q);
    if (is_rational_square(q.a) && sign_of(q.a) != 0) {
        BigRational alpha;
        QuarticModel monic = scale_leading_square(q, &alpha);
        QuarticReduction red = reduce_monic(monic);
        // forward maps take (alpha x, alpha y); reverse outputs divide by alpha
        for (RationalMap2* m : {&red.map.fwd_u, &red.map.fwd_v}) {
            m->num = p2_stretch(m->num, alpha);
            m->den = p2_stretch(m->den, alpha);
        }
        const BigRational inv = BigRational(1) / alpha;
        red.map.rev_x.num = p2_scale(red.map.rev_x.num, inv);
        red.map.rev_y.num = p2_scale(red.map.rev_y.num, inv);
        return red;
    }
    if (q.known_point) return reduce_with_point(q, *q.known_point);
    throw std::invalid_argument(
        "quartic has non-square leading coefficient and no known point; cannot reduce");
}

}  // namespace ellsolve
