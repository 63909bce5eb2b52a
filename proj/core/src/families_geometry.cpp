#include "ellsolve/families.hpp"

#include <algorithm>

namespace ellsolve::detail {

namespace {

// 2t/(1-t^2): tangent half-angle form of a rational right-triangle ratio
BigRational ratio_of(const BigRational& t) {
    return BigRational(2) * t / (BigRational(1) - t * t);
}

void require_coprime(const BigInt& m, const BigInt& n) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    if (g != 1) throw SingularParams("m, n must be coprime");
}

}  // namespace

void register_geometry_families(std::map<std::string, FamilyDef>& reg) {
    // ---- cuboid, space diagonal allowed irrational ----
    {
        FamilyDef f;
        f.id = "cuboid_body";
        f.param_names = {"m", "n"};
        f.equation = "L^2+B^2, L^2+H^2, B^2+H^2 all squares";
        f.validate = [](const Params& p) {
            const BigInt m = param_int(p, "m"), n = param_int(p, "n");
            if (m == 0 || n == 0 || m == n || m == -n) throw SingularParams("need |m| != |n|, both nonzero");
            require_coprime(m, n);
        };
        f.curve = [](const Params& p) {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational r2 = (m * m - n * n) * (m * m - n * n);
            const BigRational r3 = m * m * m * m - BigRational(6) * m * m * n * n + n * n * n * n;
            // G^2 = H (H - r2)(H - r3)
            return CurveQ(-(r2 + r3), r2 * r3, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational g = m / n;
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: f = G/(2mnH) needs H != 0"};
            const BigRational ff = pt.y / (BigRational(2) * m * n * pt.x);
            if (sign_of(ff) == 0 || ff == 1 || ff == -1)
                return Rejection{"torsion-trivial: f in {0, +-1}"};
            // e^2 + 2g(f^2-1)/(f(g^2-1)) e - 1 = 0
            const auto roots = quadratic_roots(
                BigRational(1),
                BigRational(2) * g * (ff * ff - 1) / (ff * (g * g - 1)), BigRational(-1));
            if (roots.empty()) return Rejection{"e-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& e : roots) {
                if (sign_of(e) == 0 || e == 1 || e == -1) continue;
                const BigRational LB = ratio_of(e), BH = ratio_of(g);
                // B = 1: L = |LB|, H = |1/BH|
                std::vector<BigRational> sides =
                    primitive({abs(LB), BigRational(1), abs(BigRational(1) / BH)});
                std::sort(sides.begin(), sides.end());
                Candidate c;
                c.tuple = Tuple{{"L", sides[0]}, {"B", sides[1]}, {"H", sides[2]}};
                const BigRational space =
                    sides[0] * sides[0] + sides[1] * sides[1] + sides[2] * sides[2];
                c.filter_status = is_rational_square(space)
                                      ? "perfect-cuboid?!"
                                      : "body-cuboid (space diagonal certified irrational)";
                out.push_back(std::move(c));
            }
            if (out.empty()) return Rejection{"all e-roots degenerate"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const Candidate& a, const Candidate& b) {
                                      return a.tuple == b.tuple;
                                  }),
                      out.end());
            return out;
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational L = t.at("L"), B = t.at("B"), H = t.at("H");
            if (sign_of(L) <= 0 || sign_of(B) <= 0 || sign_of(H) <= 0) return false;
            return is_rational_square(L * L + B * B) && is_rational_square(L * L + H * H) &&
                   is_rational_square(B * B + H * H);
        };
        f.meta.expected_torsion = "Z/2+Z/4";
        reg.emplace(f.id, std::move(f));
    }

    // ---- cuboid, one face diagonal allowed irrational ----
    {
        FamilyDef f;
        f.id = "cuboid_face";
        f.param_names = {"m", "n"};
        f.equation = "L^2+B^2, L^2+H^2, L^2+B^2+H^2 all squares";
        f.validate = [](const Params& p) {
            const BigInt m = param_int(p, "m"), n = param_int(p, "n");
            if (m == 0 || n == 0 || m == n || m == -n)
                throw SingularParams("need |m| != |n|, both nonzero");
            require_coprime(m, n);
        };
        f.curve = [](const Params& p) {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational r2 = (m * m + n * n) * (m * m + n * n);
            const BigRational r3 = (m * m - n * n) * (m * m - n * n);
            // G^2 = H (H + r2)(H + r3)
            return CurveQ(r2 + r3, r2 * r3, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational g = m / n;
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: f = G/(2mnH) needs H != 0"};
            const BigRational ff = pt.y / (BigRational(2) * m * n * pt.x);
            if (sign_of(ff) == 0 || ff == 1 || ff == -1)
                return Rejection{"torsion-trivial: f in {0, +-1}"};
            // e^2 + 2g(f^2-1)/(f(1-g^2)) e + 1 = 0
            const auto roots = quadratic_roots(
                BigRational(1),
                BigRational(2) * g * (ff * ff - 1) / (ff * (BigRational(1) - g * g)),
                BigRational(1));
            if (roots.empty()) return Rejection{"e-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& e : roots) {
                if (sign_of(e) == 0 || e == 1 || e == -1) continue;
                const BigRational LB = ratio_of(e), LH = ratio_of(ff);
                // L = 1: B = |1/LB|, H = |1/LH|
                std::vector<BigRational> sides =
                    primitive({BigRational(1), abs(BigRational(1) / LB), abs(BigRational(1) / LH)});
                std::sort(sides.begin(), sides.end());
                Candidate c;
                c.tuple = Tuple{{"L", sides[0]}, {"B", sides[1]}, {"H", sides[2]}};
                c.filter_status = "face-cuboid";
                out.push_back(std::move(c));
            }
            if (out.empty()) return Rejection{"all e-roots degenerate"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const Candidate& a, const Candidate& b) {
                                      return a.tuple == b.tuple;
                                  }),
                      out.end());
            return out;
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational L = t.at("L"), B = t.at("B"), H = t.at("H");
            if (sign_of(L) <= 0 || sign_of(B) <= 0 || sign_of(H) <= 0) return false;
            int face_squares = 0;
            for (const auto& pair : {BigRational(L * L + B * B), BigRational(L * L + H * H),
                                     BigRational(B * B + H * H)})
                if (is_rational_square(pair)) ++face_squares;
            return face_squares >= 2 && is_rational_square(L * L + B * B + H * H);
        };
        f.meta.expected_torsion = "Z/2+Z/4";
        reg.emplace(f.id, std::move(f));
    }

    // ---- cuboid, one side irrational (H below is that side squared) ----
    {
        FamilyDef f;
        f.id = "cuboid_side";
        f.param_names = {"f"};
        f.equation = "L^2+B^2 square; L^2+H, B^2+H, L^2+B^2+H squares (side = sqrt H)";
        f.validate = [](const Params& p) {
            const BigRational ff = param(p, "f");
            if (sign_of(ff) == 0 || ff == 1 || ff == -1)
                throw SingularParams("need f outside {0, +-1}");
        };
        f.curve = [](const Params& p) {
            const BigRational ff = param(p, "f");
            const BigRational r2 = BigRational(2) * (ff * ff + 1);
            const BigRational r3 = BigRational(2) * ff * ff * (ff * ff + 1);
            return CurveQ(r2 + r3, r2 * r3, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational ff = param(p, "f");
            if (pt.infinity) return Rejection{"infinity carries no cuboid"};
            const BigRational den =
                (ff * ff + 1) * (BigRational(4) * ff * ff + pt.x);
            if (sign_of(den) == 0) return Rejection{"pole at u = -4f^2"};
            const BigRational e = (ff * ff * pt.x - pt.x + pt.y) / den;
            if (sign_of(e) == 0 || e == 1 || e == -1)
                return Rejection{"degenerate: e in {0, +-1}"};
            const BigRational L = BigRational(2) * e, B = BigRational(1) - e * e;
            const BigRational H = (ff * ff - 1) *
                                  (e * e * (ff + 1) + BigRational(2) * e * (BigRational(1) - ff) -
                                   ff - 1) *
                                  (e * e * (ff - 1) - BigRational(2) * e * (ff + 1) - ff + 1) /
                                  (BigRational(4) * ff * ff);
            if (sign_of(H) <= 0) return Rejection{"side-squared H <= 0"};
            // scale (L, B) primitive; H scales by the square
            std::vector<BigRational> lb = primitive({abs(L), abs(B)});
            const BigRational lambda = lb[0] / abs(L);
            Candidate c;
            c.tuple = Tuple{{"L", lb[0]}, {"B", lb[1]}, {"H", H * lambda * lambda}};
            c.filter_status = is_rational_square(H) ? "all-rational?!" : "side irrational";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational L = t.at("L"), B = t.at("B"), H = t.at("H");
            if (sign_of(L) <= 0 || sign_of(B) <= 0 || sign_of(H) <= 0) return false;
            return is_rational_square(L * L + B * B) && is_rational_square(L * L + H) &&
                   is_rational_square(B * B + H) && is_rational_square(L * L + B * B + H);
        };
        f.parametric = [](Params& p, const BigRational& k) {
            if (sign_of(k) == 0 || k == 1 || k == -1)
                throw std::invalid_argument("degenerate f: 0, +-1");
            p["f"] = k;
            const BigRational f2 = k * k;
            const BigRational L = BigRational(4) * (f2 + 1) / (f2 - 1);
            const BigRational B =
                (f2 + 3) * (BigRational(3) * f2 + 1) / ((f2 - 1) * (f2 - 1));
            const BigRational f4 = f2 * f2;
            const BigRational H =
                (f4 + BigRational(8) * k * f2 - BigRational(2) * f2 + BigRational(8) * k + 1) *
                (f4 - BigRational(8) * k * f2 - BigRational(2) * f2 - BigRational(8) * k + 1) /
                (BigRational(4) * f2 * (f2 - 1) * (f2 - 1));
            if (sign_of(H) <= 0)
                throw std::invalid_argument("f outside the window where the side is real");
            return Tuple{{"L", abs(L)}, {"B", abs(B)}, {"H", H}};
        };
        f.meta.expected_torsion = "Z/2+Z/2";
        reg.emplace(f.id, std::move(f));
    }

    // ---- unit square cut into four triangles, three corner cuts ----
    {
        FamilyDef f;
        f.id = "tiling_delta";
        f.param_names = {"m", "n"};
        f.equation = "1+Y^2, 1+X^2, (1-X)^2+(1-Y)^2 all squares with 0 < X, Y < 1";
        f.validate = [](const Params& p) {
            const BigInt m = param_int(p, "m"), n = param_int(p, "n");
            if (m == 0 || n == 0 || m == n || m == -n)
                throw SingularParams("need g = m/n outside {0, +-1}");
            require_coprime(m, n);
        };
        f.curve = [](const Params& p) {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational r2 = BigRational(2) * m * m * (m + n) * (m + n);
            const BigRational r3 = BigRational(2) * (m * m + n * n) *
                                   (m * m + BigRational(2) * m * n - n * n);
            return CurveQ(-(r2 + r3), r2 * r3, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational g = m / n;
            if (pt.infinity) return Rejection{"infinity carries no tiling"};
            const BigRational n4 = n * n * n * n;
            const BigRational u = pt.x / n4, v = pt.y / (n4 * n * n);
            const BigRational gp1 = g + 1;
            const BigRational g2m = g * g + BigRational(2) * g - 1;
            const BigRational den = BigRational(4) * g * (u - gp1 * gp1 * g2m);
            if (sign_of(den) == 0) return Rejection{"pole of the z-map"};
            const BigRational z =
                (v - (g * g + BigRational(4) * g - 1) * u +
                 BigRational(2) * g * gp1 * gp1 * gp1 * g2m) /
                den;
            if (sign_of(z) == 0) return Rejection{"pole: f = 1 + 1/z"};
            const BigRational ff = BigRational(1) + BigRational(1) / z;
            if (sign_of(ff) == 0 || ff == 1 || ff == -1) return Rejection{"degenerate f"};
            // e^2 + 2 (f^2-1)(g^2-1) / (f^2(g^2+2g-1) + 4fg - g^2 - 2g + 1) e - 1 = 0
            const BigRational B =
                BigRational(2) * (ff * ff - 1) * (g * g - 1) /
                (ff * ff * g2m + BigRational(4) * ff * g - g * g - BigRational(2) * g + 1);
            const auto roots = quadratic_roots(BigRational(1), B, BigRational(-1));
            if (roots.empty()) return Rejection{"e-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& e : roots) {
                if (sign_of(e) == 0 || e == 1 || e == -1) continue;
                BigRational Y = ratio_of(e), X = ratio_of(ff);
                if (X > Y) std::swap(X, Y);  // the conditions are symmetric in X, Y
                Candidate c;
                c.tuple = Tuple{{"X", X}, {"Y", Y}};
                const bool inside = sign_of(X) > 0 && X < 1 && sign_of(Y) > 0 && Y < 1;
                c.filter_status = inside ? "unit-square tiling" : "arithmetic-only";
                out.push_back(std::move(c));
            }
            if (out.empty()) return Rejection{"all e-roots degenerate"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            return out;
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational X = t.at("X"), Y = t.at("Y");
            if (!(sign_of(X) > 0 && X < 1 && sign_of(Y) > 0 && Y < 1)) return false;
            return is_rational_square(BigRational(1) + Y * Y) &&
                   is_rational_square(BigRational(1) + X * X) &&
                   is_rational_square((BigRational(1) - X) * (BigRational(1) - X) +
                                      (BigRational(1) - Y) * (BigRational(1) - Y));
        };
        f.meta.expected_torsion = "Z/2+Z/2";
        reg.emplace(f.id, std::move(f));
    }

    // ---- unit square, two cuts meeting on the top edge ----
    {
        FamilyDef f;
        f.id = "tiling_nu";
        f.param_names = {"g"};
        f.equation = "1+Q^2, 1+(1-P)^2, (P-Q)^2+1 all squares; Q on top, P on bottom";
        f.validate = [](const Params& p) {
            const BigRational g = param(p, "g");
            if (sign_of(g) == 0 || g == 1 || g == -1)
                throw SingularParams("need g outside {0, +-1}");
        };
        f.curve = [](const Params& p) {
            const BigRational g = param(p, "g");
            const BigRational g2 = g * g;
            const BigRational a2 = BigRational(3) * g2 * g2 + BigRational(4) * g2 * g -
                                   BigRational(2) * g2 - BigRational(4) * g + 3;
            const BigRational d = (g2 - 1) * (g2 - 1);
            return CurveQ(a2, d * d, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational g = param(p, "g");
            const BigRational g2 = g * g;
            if (pt.infinity) return Rejection{"infinity carries no tiling"};
            const BigRational den =
                BigRational(2) * (g2 - 1) * (pt.x + (g2 - 1) * (g2 - 1));
            if (sign_of(den) == 0) return Rejection{"pole of the h-map"};
            const BigRational h =
                (pt.y - BigRational(2) * (g2 + g - 1) * pt.x - (g2 - 1) * (g2 - 1) * (g2 - 1)) /
                den;
            if (sign_of(h) == 0) return Rejection{"pole: f = 1 + 1/h"};
            const BigRational ff = BigRational(1) + BigRational(1) / h;
            if (sign_of(ff) == 0 || ff == 1 || ff == -1) return Rejection{"degenerate f"};
            const BigRational g2m = g2 + BigRational(2) * g - 1;
            const BigRational B = BigRational(2) * (ff * ff - 1) * (g2 - 1) /
                                  (ff * ff * g2m + BigRational(2) * ff * (g2 - 1) - g2m);
            const auto roots = quadratic_roots(BigRational(1), B, BigRational(-1));
            if (roots.empty()) return Rejection{"e-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& e : roots) {
                if (sign_of(e) == 0 || e == 1 || e == -1) continue;
                const BigRational Q = ratio_of(e);           // top point (Q, 1)
                const BigRational P = BigRational(1) - ratio_of(ff);  // bottom point (P, 0)
                Candidate c;
                c.tuple = Tuple{{"X", Q}, {"Y", P}};
                const bool inside = sign_of(P) > 0 && P < 1 && sign_of(Q) > 0 && Q < 1;
                c.filter_status = inside ? "unit-square tiling" : "arithmetic-only";
                out.push_back(std::move(c));
            }
            if (out.empty()) return Rejection{"all e-roots degenerate"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            return out;
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational Q = t.at("X"), P = t.at("Y");
            if (!(sign_of(P) > 0 && P < 1 && sign_of(Q) > 0 && Q < 1)) return false;
            return is_rational_square(BigRational(1) + Q * Q) &&
                   is_rational_square(BigRational(1) +
                                      (BigRational(1) - P) * (BigRational(1) - P)) &&
                   is_rational_square((P - Q) * (P - Q) + 1);
        };
        f.meta.expected_torsion = "Z/4";
        reg.emplace(f.id, std::move(f));
    }

    // ---- unit square, interior point joined to three corners ----
    {
        FamilyDef f;
        f.id = "tiling_kappa";
        f.param_names = {"g"};
        f.equation = "X^2+Y^2, (1-X)^2+Y^2, (1-X)^2+(1-Y)^2 all squares, 0 < X, Y < 1";
        f.validate = [](const Params& p) {
            const BigRational g = param(p, "g");
            if (sign_of(g) == 0 || g == 1 || g == -1)
                throw SingularParams("need g outside {0, +-1}");
        };
        f.curve = [](const Params& p) {
            const BigRational g = param(p, "g");
            const BigRational g2 = g * g;
            const BigRational a2 = g2 * g2 + BigRational(4) * g2 * g + BigRational(10) * g2 -
                                   BigRational(4) * g + 1;
            const BigRational g2m = g2 + BigRational(2) * g - 1;
            return CurveQ(a2, BigRational(4) * g2 * g2m * g2m, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational g = param(p, "g");
            const BigRational g2 = g * g;
            const BigRational g2m = g2 + BigRational(2) * g - 1;
            if (pt.infinity) return Rejection{"infinity carries no tiling"};
            const BigRational den =
                BigRational(2) * g2m * (pt.x + BigRational(4) * g2);
            if (sign_of(den) == 0) return Rejection{"pole of the z-map"};
            const BigRational z =
                (pt.y - (g2 + BigRational(4) * g - 1) * pt.x - BigRational(4) * g2 * g2m) / den;
            if (sign_of(z) == 0) return Rejection{"pole: f = 1 + 1/z"};
            const BigRational ff = BigRational(1) + BigRational(1) / z;
            if (sign_of(ff) == 0 || ff == 1 || ff == -1) return Rejection{"degenerate f"};
            const BigRational B = BigRational(2) * g * (ff * ff - 1) /
                                  (ff * ff * g + ff * g2m - g);
            const auto roots = quadratic_roots(BigRational(1), B, BigRational(-1));
            if (roots.empty()) return Rejection{"e-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& e : roots) {
                if (sign_of(e) == 0 || e == 1 || e == -1) continue;
                // 1/Y = 2e/(1-e^2) + 2f/(1-f^2); X = Y * 2e/(1-e^2)
                const BigRational inv = ratio_of(e) + ratio_of(ff);
                if (sign_of(inv) == 0) continue;
                const BigRational Y = BigRational(1) / inv;
                const BigRational X = Y * ratio_of(e);
                Candidate c;
                c.tuple = Tuple{{"X", X}, {"Y", Y}};
                const bool inside = sign_of(X) > 0 && X < 1 && sign_of(Y) > 0 && Y < 1;
                c.filter_status = inside ? "unit-square tiling" : "arithmetic-only";
                out.push_back(std::move(c));
            }
            if (out.empty()) return Rejection{"all e-roots degenerate"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            return out;
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational X = t.at("X"), Y = t.at("Y");
            if (!(sign_of(X) > 0 && X < 1 && sign_of(Y) > 0 && Y < 1)) return false;
            const BigRational x1 = BigRational(1) - X, y1 = BigRational(1) - Y;
            return is_rational_square(X * X + Y * Y) && is_rational_square(x1 * x1 + Y * Y) &&
                   is_rational_square(x1 * x1 + y1 * y1);
        };
        f.meta.expected_torsion = "Z/4";
        reg.emplace(f.id, std::move(f));
    }

    // ---- crossed configuration: no solution is known ----
    {
        FamilyDef f;
        f.id = "tiling_chi";
        f.param_names = {"e", "f"};
        f.equation = "a^2+c^2, a^2+d^2, b^2+c^2, b^2+d^2 all squares with a+b = c+d";
        f.validate = [](const Params& p) {
            const BigRational e = param(p, "e"), ff = param(p, "f");
            for (const BigRational& t : {e, ff})
                if (sign_of(t) == 0 || t == 1 || t == -1)
                    throw SingularParams("need e, f outside {0, +-1}");
        };
        f.curve = [](const Params& p) {
            const BigRational e = param(p, "e"), ff = param(p, "f");
            const BigRational r2 = BigRational(4) * e * e * (ff * ff - 1) * (ff * ff - 1);
            const BigRational r3 = BigRational(4) * ff * ff * (e * e - 1) * (e * e - 1);
            return CurveQ(r2 + r3, r2 * r3, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational e = param(p, "e"), ff = param(p, "f");
            if (pt.infinity) return Rejection{"infinity carries no configuration"};
            const BigRational den =
                BigRational(2) * e * (ff * ff - 1) *
                (pt.x + BigRational(4) * ff * ff * (e * e - 1) * (e * e - 1));
            if (sign_of(den) == 0) return Rejection{"pole of the g-map"};
            const BigRational g = pt.y / den;
            if (sign_of(g) == 0 || g == 1 || g == -1) return Rejection{"degenerate g"};
            // h^2 + e(1-f^2)(1-g^2)/(f g (1-e^2)) h - 1 = 0
            const BigRational B = e * (BigRational(1) - ff * ff) * (BigRational(1) - g * g) /
                                  (ff * g * (BigRational(1) - e * e));
            const auto roots = quadratic_roots(BigRational(1), B, BigRational(-1));
            if (roots.empty()) return Rejection{"h-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& h : roots) {
                if (sign_of(h) == 0 || h == 1 || h == -1) continue;
                // a = 1; c/a, d/a, c/b, d/b close the rectangle
                const BigRational c = ratio_of(e), d = ratio_of(ff);
                const BigRational b_from_g = c / ratio_of(g);
                const BigRational b_from_h = d / ratio_of(h);
                if (b_from_g != b_from_h) continue;  // wrong root pairing
                std::vector<BigRational> vals =
                    primitive({BigRational(1), b_from_g, c, d});
                Candidate cand;
                cand.tuple = Tuple{
                    {"a", vals[0]}, {"b", vals[1]}, {"c", vals[2]}, {"d", vals[3]}};
                const BigRational cd = vals[2] + vals[3];
                if (sign_of(cd) != 0) {
                    const BigRational gap = abs((vals[0] + vals[1]) / cd - 1);
                    cand.tuple.entries.emplace_back("gap", gap);
                    cand.filter_status = sign_of(gap) == 0 ? "solution?!" : "near-miss";
                } else {
                    cand.filter_status = "degenerate";
                }
                out.push_back(std::move(cand));
            }
            if (out.empty()) return Rejection{"no h-root pairs with the configuration"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            return out;
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c"), d = t.at("d");
            if (sign_of(a) <= 0 || sign_of(b) <= 0 || sign_of(c) <= 0 || sign_of(d) <= 0)
                return false;
            return is_rational_square(a * a + c * c) && is_rational_square(a * a + d * d) &&
                   is_rational_square(b * b + c * c) && is_rational_square(b * b + d * d) &&
                   a + b == c + d;
        };
        f.meta.expected_torsion = "Z/2+Z/2";
        reg.emplace(f.id, std::move(f));
    }

    // ---- 3x3 magic square with square entries ----
    {
        FamilyDef f;
        f.id = "magic_square";
        f.param_names = {"m", "n"};
        f.equation = "six entries of the 3x3 magic square from (a, b, c) made square";
        f.validate = [](const Params& p) {
            const BigInt m = param_int(p, "m"), n = param_int(p, "n");
            if (m == 0 || n == 0 || m == n || m == -n)
                throw SingularParams("need distinct nonzero m, n");
            require_coprime(m, n);
        };
        f.curve = [](const Params& p) {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational m2 = m * m, n2 = n * n;
            const BigRational a2 =
                BigRational(2) * (m2 * m2 + BigRational(18) * m2 * n2 + n2 * n2);
            const BigRational tp = m2 + BigRational(4) * m * n + n2;
            const BigRational tm = m2 - BigRational(4) * m * n + n2;
            return CurveQ(a2, tp * tp * tm * tm, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational m2 = m * m, n2 = n * n;
            const BigRational T = (m2 + BigRational(4) * m * n + n2) *
                                  (m2 + BigRational(4) * m * n + n2) *
                                  (m2 - BigRational(4) * m * n + n2) *
                                  (m2 - BigRational(4) * m * n + n2);
            if (pt.infinity) return Rejection{"infinity carries no square"};
            const BigRational A = m2 * m2 + BigRational(8) * m2 * m * n +
                                  BigRational(2) * m2 * n2 - BigRational(8) * m * n * n2 +
                                  n2 * n2;
            const BigRational Ar = m2 * m2 - BigRational(8) * m2 * m * n +
                                   BigRational(2) * m2 * n2 + BigRational(8) * m * n * n2 +
                                   n2 * n2;
            const BigRational den = -(m2 + n2) * pt.y + Ar * pt.x + T;
            if (sign_of(den) == 0) return Rejection{"pole of the f-map"};
            const BigRational ff = (-(m2 + n2) * pt.y - A * pt.x - T) / den;
            if (ff == 1 || ff == -1 || sign_of(ff) == 0)
                return Rejection{"degenerate rotation f"};
            const BigRational g = m / n;
            // R = 4 (cg sg - cf sf) / ((cg^2 - sg^2) - 1 - (cf^2 - sf^2))
            auto cs = [](const BigRational& t) -> std::pair<BigRational, BigRational> {
                const BigRational d = t * t + 1;
                return {(BigRational(1) - t * t) / d, BigRational(2) * t / d};
            };
            const auto [cf, sf] = cs(ff);
            const auto [cg, sg] = cs(g);
            const BigRational denom = (cg * cg - sg * sg) - 1 - (cf * cf - sf * sf);
            if (sign_of(denom) == 0) return Rejection{"degenerate rotation pair"};
            const BigRational R = BigRational(4) * (cg * sg - cf * sf) / denom;
            const auto roots = quadratic_roots(BigRational(1), R, BigRational(-1));
            if (roots.empty()) return Rejection{"p/q quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& rho : roots) {
                if (sign_of(rho) == 0) continue;
                const BigRational pp(rho.get_num()), qq(rho.get_den());
                const BigRational r = cf * pp + sf * qq, s = -sf * pp + cf * qq;
                const BigRational u = cg * pp + sg * qq, v = -sg * pp + cg * qq;
                const BigRational a = (pp * pp + qq * qq) / 2;
                const BigRational b = (pp * pp - qq * qq) / 2;
                const BigRational c = (r * r - s * s) / 2;
                // consistency: u^2 - v^2 = 2(b + c)
                if (u * u - v * v != BigRational(2) * (b + c)) continue;
                Candidate cand;
                cand.tuple = Tuple{{"a", a}, {"b", b}, {"c", c}};
                cand.filter_status = "six-squares";
                out.push_back(std::move(cand));
            }
            if (out.empty()) return Rejection{"no p/q root closes the square"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            return out;
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            // the six constructed entries must be rational squares
            for (const BigRational& v :
                 {BigRational(a + b), BigRational(a - b), BigRational(a + c), BigRational(a - c),
                  BigRational(a + b + c), BigRational(a - b - c)})
                if (!is_rational_square(v)) return false;
            return true;
        };
        f.meta.expected_torsion = "Z/2+Z/4";
        reg.emplace(f.id, std::move(f));
    }
}

}  // namespace ellsolve::detail
