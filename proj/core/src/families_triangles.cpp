#include "ellsolve/families.hpp"

#include <algorithm>

namespace ellsolve::detail {

namespace {

void sort_values(std::vector<BigRational>& v) { std::sort(v.begin(), v.end()); }

// sides scaled to a primitive integer triple, ascending
Candidate scaled_triangle(std::vector<BigRational> sides) {
    for (auto& s : sides) s = abs(s);
    sides = primitive(sides);
    sort_values(sides);
    Candidate c;
    c.tuple = Tuple{{"a", sides[0]}, {"b", sides[1]}, {"c", sides[2]}};
    c.filter_status =
        triangle_inequalities(sides[0], sides[1], sides[2]) ? "triangle" : "arithmetic-only";
    return c;
}

}  // namespace

void register_triangle_families(std::map<std::string, FamilyDef>& reg) {
    // ---- x + y + z = N = x y z ----
    {
        FamilyDef f;
        f.id = "eq_sum_product";
        f.param_names = {"N"};
        f.equation = "x + y + z = N = x*y*z";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") == 0) throw SingularParams("N must be nonzero");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(N * N, BigRational(8) * N * N, BigRational(16) * N * N);
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: x = -4N/H needs H != 0, no finite solution"};
            const BigRational x = BigRational(-4) * N / pt.x;
            const BigRational D = pt.y * x * x / (BigRational(4) * N);
            std::vector<Candidate> out;
            for (const BigRational& d : {BigRational(D), BigRational(-D)}) {
                const BigRational y = (-(x - N) + d / x) / 2;
                if (sign_of(y) == 0) continue;
                const BigRational z = N / (x * y);
                std::vector<BigRational> v{x, y, z};
                sort_values(v);
                Candidate c;
                c.tuple = Tuple{{"x", v[0]}, {"y", v[1]}, {"z", v[2]}};
                c.filter_status = sign_of(v[0]) > 0 ? "positive" : "mixed-sign";
                out.push_back(std::move(c));
            }
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const Candidate& a, const Candidate& b) {
                                      return a.tuple == b.tuple;
                                  }),
                      out.end());
            if (out.empty()) return Rejection{"roots collapse to zero"};
            return out;
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational x = t.at("x"), y = t.at("y"), z = t.at("z");
            return x + y + z == N && x * y * z == N;
        };
        f.parametric = [](Params& p, const BigRational& k) {
            if (sign_of(k) == 0 || k == 1 || k == -1)
                throw std::invalid_argument("degenerate k for the N = 2k^2 - 2 family");
            const BigRational N = BigRational(2) * k * k - 2;
            if (p.count("N") && p.at("N") != N)
                throw std::invalid_argument("k fixes N = 2k^2 - 2 = " + rat_str(N));
            p["N"] = N;
            std::vector<BigRational> v{(BigRational(1) - k) / k, BigRational(2) * k * k,
                                       BigRational(-(k + 1) / k)};
            sort_values(v);
            return Tuple{{"x", v[0]}, {"y", v[1]}, {"z", v[2]}};
        };
        {
            auto curve = f.curve;
            f.isogenies.push_back({"3-isogeny", [curve](const Params& p) {
                                       return isogeny3(curve(p));
                                   }});
        }
        f.meta.expected_torsion = "Z/3";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(4096) * N * N * N * N * (N * N - 27);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- congruent numbers ----
    {
        FamilyDef f;
        f.id = "congruent";
        f.param_names = {"N"};
        f.equation = "a^2 + b^2 = h^2 with a*b/2 = N";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") <= 0) throw SingularParams("N must be a positive integer");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(0), -N * N, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity || sign_of(pt.y) == 0)
                return Rejection{"torsion point: no triangle has area 0"};
            BigRational a = abs(pt.y / pt.x);
            BigRational b = BigRational(2) * N / a;
            if (a > b) std::swap(a, b);
            const BigRational h = abs((pt.x * pt.x + N * N) / pt.y);
            Candidate c;
            c.tuple = Tuple{{"a", a}, {"b", b}, {"h", h}};
            c.filter_status = "triangle";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b"), h = t.at("h");
            return sign_of(a) > 0 && sign_of(b) > 0 && a * a + b * b == h * h &&
                   a * b == BigRational(2) * N;
        };
        {
            auto curve = f.curve;
            f.isogenies.push_back({"2-isogeny", [curve](const Params& p) {
                                       return isogeny2(curve(p));
                                   }});
        }
        f.meta.expected_torsion = "Z/2+Z/2";
        reg.emplace(f.id, std::move(f));
    }

    // ---- theta-congruent: angle with cos = s/r, area N sqrt(r^2 - s^2) ----
    {
        FamilyDef f;
        f.id = "theta_congruent";
        f.param_names = {"N", "r", "s"};
        f.equation = "b*c = 2rN and b^2 + c^2 - a^2 = 4sN  (area^2 = N^2 (r^2 - s^2))";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N"), r = param_int(p, "r"), s = param_int(p, "s");
            if (N <= 0) throw SingularParams("N must be positive");
            if (r <= 0 || abs(s) >= r) throw SingularParams("need |s| < r for a real angle");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N"), r = param(p, "r"), s = param(p, "s");
            return CurveQ(BigRational(2) * N * s, N * N * (s * s - r * r), BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N"), r = param(p, "r"), s = param(p, "s");
            if (pt.infinity || sign_of(pt.x) == 0) return Rejection{"torsion pole: b = G/H"};
            BigRational b = abs(pt.y / pt.x);
            if (sign_of(b) == 0) return Rejection{"degenerate side b = 0"};
            BigRational c = BigRational(2) * r * N / b;
            const auto a = rational_square_root(b * b + c * c - BigRational(4) * s * N);
            if (!a) return Rejection{"a^2 fails to be a rational square"};
            if (sign_of(*a) == 0) return Rejection{"degenerate side a = 0"};
            if (b > c) std::swap(b, c);
            Candidate cand;
            cand.tuple = Tuple{{"a", *a}, {"b", b}, {"c", c}};
            cand.filter_status =
                triangle_inequalities(*a, b, c) ? "triangle" : "arithmetic-only";
            return std::vector<Candidate>{cand};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N"), r = param(p, "r"), s = param(p, "s");
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            return sign_of(a) > 0 && sign_of(b) > 0 && sign_of(c) > 0 &&
                   b * c == BigRational(2) * r * N &&
                   b * b + c * c - a * a == BigRational(4) * s * N;
        };
        f.meta.expected_torsion = "Z/2+Z/2";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N"), r = param(p, "r"), s = param(p, "s");
            // 64 N^6 r^2 (r^2-s^2)^2; the (r,s) = (2,+-1) cases give 2304 N^6
            const BigRational n2 = N * N, d2 = (r * r - s * s);
            return BigRational(64) * n2 * n2 * n2 * r * r * d2 * d2;
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- t-congruent (N = 1, angle 2*atan(t)) ----
    {
        FamilyDef f;
        f.id = "t_congruent";
        f.param_names = {"m", "n"};
        f.equation = "a^2 = b^2 + c^2 - 2bc(1-t^2)/(1+t^2), bc*t/(1+t^2) = 1, t = m/n";
        f.validate = [](const Params& p) {
            const BigInt m = param_int(p, "m"), n = param_int(p, "n");
            if (m <= 0 || n <= 0) throw SingularParams("need m, n positive (t nonzero)");
            BigInt g;
            mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
            if (g != 1) throw SingularParams("m, n must be coprime");
        };
        f.curve = [](const Params& p) {
            const BigRational m = param(p, "m"), n = param(p, "n");
            // G^2 = H (H + m n^3)(H - m^3 n)
            const BigRational r2 = m * n * n * n, r3 = -(m * m * m * n);
            return CurveQ(r2 + r3, r2 * r3, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational t = m / n;
            if (pt.infinity || sign_of(pt.x) == 0) return Rejection{"torsion pole: b = G/(mnH)"};
            BigRational b = abs(pt.y / (m * n * pt.x));
            if (sign_of(b) == 0) return Rejection{"degenerate side b = 0"};
            BigRational c = (t * t + 1) / (b * t);
            const BigRational a2 =
                b * b + c * c - BigRational(2) * b * c * (BigRational(1) - t * t) / (t * t + 1);
            const auto a = rational_square_root(a2);
            if (!a) return Rejection{"a^2 fails to be a rational square"};
            if (sign_of(*a) == 0) return Rejection{"degenerate side a = 0"};
            if (b > c) std::swap(b, c);
            Candidate cand;
            cand.tuple = Tuple{{"a", *a}, {"b", b}, {"c", c}};
            cand.filter_status =
                triangle_inequalities(*a, b, c) ? "triangle" : "arithmetic-only";
            return std::vector<Candidate>{cand};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational m = param(p, "m"), n = param(p, "n");
            const BigRational tt = m / n;
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            return sign_of(a) > 0 && sign_of(b) > 0 && sign_of(c) > 0 &&
                   a * a * (tt * tt + 1) ==
                       (b * b + c * c) * (tt * tt + 1) -
                           BigRational(2) * b * c * (BigRational(1) - tt * tt) &&
                   b * c * tt == tt * tt + 1;
        };
        f.meta.expected_torsion = "Z/2+Z/2";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational m = param(p, "m"), n = param(p, "n");
            BigRational mn10(1);
            for (int i = 0; i < 10; ++i) mn10 *= m * n;
            return BigRational(16) * mn10 * (m * m + n * n) * (m * m + n * n);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- base/altitude = N (integer triangle, altitude against base b) ----
    {
        FamilyDef f;
        f.id = "base_alt_ba";
        f.param_names = {"N"};
        f.equation = "integer triangle (b, y, z) whose altitude onto b satisfies b = N * alt";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") <= 0) throw SingularParams("N must be positive");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(N * N + 2, BigRational(1), BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity carries no triangle"};
            const BigRational den = pt.y + (N - 1) * pt.x - 1;
            if (sign_of(den) == 0) return Rejection{"pole of the k-map"};
            const BigRational k = (pt.y + (N + 1) * pt.x + 1) / den;
            const BigRational a = k * k - 1;
            if (sign_of(a) == 0) return Rejection{"torsion-trivial: altitude collapses (k = +-1)"};
            const BigRational x = BigRational(2) * k;
            const BigRational b = N * a;
            const BigRational y = k * k + 1;
            const auto z = rational_square_root(a * a + (b - x) * (b - x));
            if (!z) return Rejection{"z^2 fails to be a rational square"};
            return std::vector<Candidate>{scaled_triangle({b, y, *z})};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const auto v = t.values();
            if (!triangle_inequalities(v[0], v[1], v[2])) return false;
            const BigRational h16 = heron_16_area_sq(v[0], v[1], v[2]);
            // some side b must satisfy b^2 = 2 N Area, i.e. 4 b^4 = N^2 * (16 Area^2)
            for (const auto& b : v) {
                if (BigRational(4) * b * b * b * b == N * N * h16) return true;
            }
            return false;
        };
        {
            auto curve = f.curve;
            f.isogenies.push_back({"2-isogeny", [curve](const Params& p) {
                                       return isogeny2(curve(p));
                                   }});
            f.isogenies.push_back({"4-isogeny", [curve](const Params& p) {
                                       return isogeny4(curve(p));
                                   }});
        }
        f.meta.expected_torsion = "Z/4";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(16) * N * N * (N * N + 4);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- altitude/base = N (altitude is N times its base) ----
    {
        FamilyDef f;
        f.id = "base_alt_ab";
        f.param_names = {"N"};
        f.equation = "integer triangle (b, y, z) whose altitude onto b satisfies alt = N * b";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") <= 0) throw SingularParams("N must be positive");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(2) * N * N + 1, N * N * N * N, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity carries no triangle"};
            const BigRational N3 = N * N * N;
            const BigRational den = pt.y + (BigRational(1) - N) * pt.x - N3;
            if (sign_of(den) == 0) return Rejection{"pole of the k-map"};
            const BigRational k = (pt.y + (N + 1) * pt.x + N3) / den;
            const BigRational a = k * k - 1;
            if (sign_of(a) == 0) return Rejection{"torsion-trivial: altitude collapses (k = +-1)"};
            const BigRational x = BigRational(2) * k;
            const BigRational b = a / N;
            const BigRational y = k * k + 1;
            const auto z = rational_square_root(a * a + (b - x) * (b - x));
            if (!z) return Rejection{"z^2 fails to be a rational square"};
            return std::vector<Candidate>{scaled_triangle({b, y, *z})};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const auto v = t.values();
            if (!triangle_inequalities(v[0], v[1], v[2])) return false;
            const BigRational h16 = heron_16_area_sq(v[0], v[1], v[2]);
            // altitude = N b: 2 Area = N b^2, i.e. 16 Area^2 = 4 N^2 b^4
            for (const auto& b : v) {
                if (BigRational(4) * N * N * b * b * b * b == h16) return true;
            }
            return false;
        };
        {
            auto curve = f.curve;
            f.isogenies.push_back({"2-isogeny", [curve](const Params& p) {
                                       return isogeny2(curve(p));
                                   }});
            f.isogenies.push_back({"4-isogeny", [curve](const Params& p) {
                                       return isogeny4(curve(p));
                                   }});
        }
        f.meta.expected_torsion = "Z/4";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            const BigRational n4 = N * N * N * N;
            return BigRational(16) * n4 * n4 * (BigRational(4) * N * N + 1);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- two right triangles on one base, heights in ratio N : 1 ----
    {
        FamilyDef f;
        f.id = "leech";
        f.param_names = {"N"};
        f.equation = "b^2 + a^2 = c^2 and b^2 + (N a)^2 = d^2";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0) throw SingularParams("N must be nonzero");
            if (N == 1 || N == -1) throw SingularParams("singular if N = 1");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(N * N + 1, N * N, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity carries no triangle"};
            const BigRational den = pt.x + N * N;
            if (sign_of(den) == 0 || sign_of(pt.y) == 0)
                return Rejection{"torsion point: p/q degenerates to 0 or +-1"};
            const BigRational rho = pt.y / den;  // p/q
            const BigInt pn = rho.get_num(), qn = rho.get_den();
            BigRational b(abs(pn * pn - qn * qn));
            BigRational a(BigInt(2) * pn * qn);
            if (sign_of(b) == 0 || sign_of(a) == 0)
                return Rejection{"torsion point: |p/q| = 1 gives a degenerate triangle"};
            a = abs(a);
            auto v = primitive({b, a});
            b = v[0];
            a = v[1];
            const auto c = rational_square_root(b * b + a * a);
            const auto d = rational_square_root(b * b + N * N * a * a);
            if (!c || !d) return Rejection{"hypotenuse fails to be rational"};
            Candidate cand;
            cand.tuple = Tuple{{"b", b}, {"a", a}, {"c", *c}, {"d", *d}};
            cand.filter_status = "triangle-pair";
            return std::vector<Candidate>{cand};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational b = t.at("b"), a = t.at("a"), c = t.at("c"), d = t.at("d");
            return sign_of(a) > 0 && sign_of(b) > 0 && b * b + a * a == c * c &&
                   b * b + N * N * a * a == d * d;
        };
        f.parametric = [](Params& p, const BigRational& k) {
            if (sign_of(k) == 0) throw std::invalid_argument("k = 0 gives N = 0");
            const BigRational N = BigRational(4) * k * k + BigRational(3) * k;
            if (sign_of(N) == 0 || N == 1)
                throw std::invalid_argument("degenerate k: N in {0, 1}");
            if (p.count("N") && p.at("N") != N)
                throw std::invalid_argument("k fixes N = 4k^2 + 3k = " + rat_str(N));
            p["N"] = N;
            BigRational b = BigRational(4) * k * (BigRational(2) * k + 1);
            BigRational a = BigRational(4) * k + 1;
            auto v = primitive({abs(b), abs(a)});
            const auto c = rational_square_root(v[0] * v[0] + v[1] * v[1]);
            const auto d = rational_square_root(v[0] * v[0] + N * N * v[1] * v[1]);
            if (!c || !d) throw std::logic_error("parametric hypotenuses not rational");
            return Tuple{{"b", v[0]}, {"a", v[1]}, {"c", *c}, {"d", *d}};
        };
        {
            auto curve = f.curve;
            f.isogenies.push_back({"2-isogeny", [curve](const Params& p) {
                                       return isogeny2(curve(p));
                                   }});
        }
        f.meta.expected_torsion = "Z/2+Z/4";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(16) * N * N * N * N * (N * N - 1) * (N * N - 1);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- circumradius/inradius = N ----
    {
        FamilyDef f;
        f.id = "circum_in";
        f.param_names = {"N"};
        f.equation = "2abc = N (a+b-c)(b+c-a)(c+a-b)";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 2) throw SingularParams("singular when N = 2");
            if (N < 2) throw SingularParams("R/r >= 2 for every triangle");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(2) * (BigRational(2) * N * N - BigRational(2) * N - 1),
                          BigRational(4) * N + 1, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity carries no triangle"};
            const CurveQ e(BigRational(2) * (BigRational(2) * N * N - BigRational(2) * N - 1),
                           BigRational(4) * N + 1, BigRational(0));
            const BigRational u = (BigRational(4) * N + 1 - pt.x) / (BigRational(2) * N);
            if (component_of(e, pt) != Component::egg)
                return Rejection{"filter: point on the infinite component gives no positive "
                                 "triangle"};
            if (!(u > 2)) return Rejection{"filter: perimeter ratio u <= 2"};
            // with base b = 1 and perimeter u, the other sides solve
            // 2(2Nu - 4N - 1) a^2 - 2(2Nu^2 - (6N+1)u + 4N+1) a + N u (u-2)^2 = 0
            const BigRational A = BigRational(2) * (BigRational(2) * N * u - BigRational(4) * N - 1);
            const BigRational B =
                BigRational(-2) *
                (BigRational(2) * N * u * u - (BigRational(6) * N + 1) * u + BigRational(4) * N + 1);
            const BigRational C = N * u * (u - 2) * (u - 2);
            const auto roots = quadratic_roots(A, B, C);
            if (roots.size() != 2) return Rejection{"side quadratic has no rational roots"};
            return std::vector<Candidate>{scaled_triangle({roots[0], BigRational(1), roots[1]})};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const auto v = t.values();
            if (!triangle_inequalities(v[0], v[1], v[2])) return false;
            const BigRational num = BigRational(2) * v[0] * v[1] * v[2];
            const BigRational den =
                (v[0] + v[1] - v[2]) * (v[1] + v[2] - v[0]) * (v[2] + v[0] - v[1]);
            return num == N * den;
        };
        {
            auto curve = f.curve;
            f.isogenies.push_back({"2-isogeny", [curve](const Params& p) {
                                       return isogeny2(curve(p));
                                   }});
            // x = z + 1 reshapes the model around its inflexion point; the
            // 3-isogeny then lands on g^2 = f^3 + 18(2N^2+10N-1) f^2 + 81(4N+1)^3 f
            f.isogenies.push_back({"3-isogeny", [curve](const Params& p) {
                                       const BigRational N = param(p, "N");
                                       IsogenyMap pre = identity_isogeny(curve(p));
                                       shift_target(pre, BigRational(-1));
                                       IsogenyMap m = compose({pre, isogeny3(pre.target())});
                                       const BigRational f1 = BigRational(4) * N + 1;
                                       shift_target(m, BigRational(-3) * f1 * f1);
                                       return m;
                                   }});
            f.isogenies.push_back({"6-isogeny", [curve](const Params& p) {
                                       const BigRational N = param(p, "N");
                                       IsogenyMap pre = identity_isogeny(curve(p));
                                       shift_target(pre, BigRational(-1));
                                       IsogenyMap m = compose({pre, isogeny3(pre.target())});
                                       const BigRational f1 = BigRational(4) * N + 1;
                                       shift_target(m, BigRational(-3) * f1 * f1);
                                       return compose({m, isogeny2(m.target())});
                                   }});
        }
        f.meta.expected_torsion = "Z/6";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(256) * N * N * N * (N - 2) * (BigRational(4) * N + 1) *
                   (BigRational(4) * N + 1);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- median/bisector = N ----
    {
        FamilyDef f;
        f.id = "median_bisector_mt";
        f.param_names = {"N"};
        f.equation = "(2(b^2+c^2)-a^2)(b+c)^2 = 4 N^2 bc ((b+c)^2 - a^2)";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") < 2) throw SingularParams("N must be an integer >= 2");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            const BigRational n2 = N * N;
            return CurveQ(BigRational(2) * (BigRational(2) * n2 * n2 - n2 - 1),
                          (n2 - 1) * (n2 - 1), BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity || sign_of(pt.x) == 0) return Rejection{"torsion pole: w needs u != 0"};
            const BigRational w =
                pt.y / (BigRational(4) * (N * N - 1) * pt.x) - make_rational(1, 2);
            if (sign_of(w) == 0) return Rejection{"pole: z = 1 + 1/w"};
            const BigRational z = BigRational(1) + BigRational(1) / w;  // z = b/c
            if (sign_of(z) == 0) return Rejection{"degenerate b = 0"};
            const BigRational b = abs(z.get_num()), c = abs(z.get_den());
            const BigRational num =
                BigRational(2) * (b + c) * (b + c) * (b * b - BigRational(2) * b * c * N * N + c * c);
            const BigRational den =
                b * b + BigRational(2) * b * c * (BigRational(1) - BigRational(2) * N * N) + c * c;
            if (sign_of(den) == 0) return Rejection{"side quadratic degenerates"};
            const auto a = rational_square_root(num / den);
            if (!a) return Rejection{"a^2 fails to be a rational square"};
            if (sign_of(*a) == 0) return Rejection{"degenerate a = 0"};
            std::vector<BigRational> scaled = primitive({*a, b, c});
            if (scaled[1] < scaled[2]) std::swap(scaled[1], scaled[2]);
            Candidate cand;
            cand.tuple = Tuple{{"a", scaled[0]}, {"b", scaled[1]}, {"c", scaled[2]}};
            cand.filter_status = triangle_inequalities(scaled[0], scaled[1], scaled[2])
                                     ? "triangle"
                                     : "arithmetic-only";
            return std::vector<Candidate>{cand};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            if (sign_of(a) <= 0 || sign_of(b) <= 0 || sign_of(c) <= 0) return false;
            const BigRational bc2 = (b + c) * (b + c);
            return (BigRational(2) * (b * b + c * c) - a * a) * bc2 ==
                   BigRational(4) * N * N * b * c * (bc2 - a * a);
        };
        f.parametric = [](Params& p, const BigRational& k) {
            // degree-8 family in N itself
            if (k.get_den() != 1 || k < 2)
                throw std::invalid_argument("parametric index is N itself, an integer >= 2");
            p["N"] = k;
            const BigRational N = k;
            const BigRational n4 = N * N * N * N, n8 = n4 * n4;
            const BigRational a = BigRational(2) * (n8 - BigRational(3) * n4 + 1);
            const BigRational b = (n4 + BigRational(2) * N * N * N + N * N - BigRational(2) * N - 1) *
                                  (n4 - N * N + 1);
            const BigRational c = (n4 - BigRational(2) * N * N * N + N * N + BigRational(2) * N - 1) *
                                  (n4 - N * N + 1);
            auto v = primitive({a, b, c});
            return Tuple{{"a", v[0]}, {"b", v[1]}, {"c", v[2]}};
        };
        f.meta.expected_torsion = "Z/2";
        reg.emplace(f.id, std::move(f));
    }

    // ---- median/altitude = N ----
    {
        FamilyDef f;
        f.id = "median_alt_mh";
        f.param_names = {"N"};
        f.equation = "a^2 (2b^2 + 2c^2 - a^2) = N^2 (a+b+c)(-a+b+c)(a-b+c)(a+b-c)";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") < 2) throw SingularParams("N must be an integer >= 2");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            const BigRational n2 = N * N;
            return CurveQ(BigRational(4) * n2 * n2 - BigRational(6) * n2 + 2, (n2 - 1) * (n2 - 1),
                          BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity carries no triangle"};
            // a/perimeter, with perimeter 1
            const BigRational a = pt.x / (BigRational(2) * (BigRational(1) - N * N)) +
                                  make_rational(1, 2);
            if (sign_of(a) == 0) return Rejection{"degenerate a = 0"};
            // 4(a^2 - 2aN^2 + N^2) b^2 + 4(a^3 - a^2(2N^2+1) + 3aN^2 - N^2) b
            //   + a^4 - 4a^3 + 2a^2(2N^2+1) - 4aN^2 + N^2 = 0  (perimeter 1)
            const BigRational n2 = N * N;
            const BigRational A = BigRational(4) * (a * a - BigRational(2) * a * n2 + n2);
            const BigRational B =
                BigRational(4) *
                (a * a * a - a * a * (BigRational(2) * n2 + 1) + BigRational(3) * a * n2 - n2);
            const BigRational C = a * a * a * a - BigRational(4) * a * a * a +
                                  BigRational(2) * a * a * (BigRational(2) * n2 + 1) -
                                  BigRational(4) * a * n2 + n2;
            const auto roots = quadratic_roots(A, B, C);
            if (roots.empty()) return Rejection{"side quadratic has no rational roots"};
            std::vector<Candidate> out;
            for (const auto& b : roots) {
                const BigRational c = BigRational(1) - a - b;
                if (sign_of(b) == 0 || sign_of(c) == 0) continue;
                auto v = primitive({a, b, c});
                if (v[1] < v[2]) std::swap(v[1], v[2]);
                Candidate cand;
                cand.tuple = Tuple{{"a", v[0]}, {"b", v[1]}, {"c", v[2]}};
                cand.filter_status =
                    triangle_inequalities(v[0], v[1], v[2]) ? "triangle" : "arithmetic-only";
                out.push_back(std::move(cand));
            }
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a_, const Candidate& b_) { return a_.tuple < b_.tuple; });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const Candidate& a_, const Candidate& b_) {
                                      return a_.tuple == b_.tuple;
                                  }),
                      out.end());
            if (out.empty()) return Rejection{"both roots degenerate"};
            return out;
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            if (sign_of(a) <= 0 || sign_of(b) <= 0 || sign_of(c) <= 0) return false;
            return a * a * (BigRational(2) * (b * b + c * c) - a * a) ==
                   N * N * heron_16_area_sq(a, b, c);
        };
        f.meta.expected_torsion = "Z/4";
        reg.emplace(f.id, std::move(f));
    }

    // ---- bisector/altitude = N: closed form, no curve ----
    {
        FamilyDef f;
        f.id = "bisector_alt_th";
        f.param_names = {"N"};
        f.equation = "bc((b+c)^2 - a^2) * 4a^2 = 4 N^2 * HeronSq * (b+c)^2  (t/h = N)";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") < 2)
                throw SingularParams("N must be an integer >= 2 (N = 1 degenerates)");
        };
        f.parametric = [](Params& p, const BigRational& k) {
            if (k.get_den() != 1 || k < 2)
                throw std::invalid_argument("parametric index is N itself, an integer >= 2");
            p["N"] = k;
            const BigRational N = k;
            const BigRational a = BigRational(4) * N * N - 1;
            const BigRational b = BigRational(2) * N * N * (BigRational(4) * N * N - 3);
            const BigRational c =
                (BigRational(2) * N * N - 1) * (BigRational(4) * N * N - 3);
            return Tuple{{"a", a}, {"b", b}, {"c", c}};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            if (!triangle_inequalities(a, b, c)) return false;
            const BigRational bc2 = (b + c) * (b + c);
            // t^2 = bc(1 - a^2/(b+c)^2), h^2 = HeronSq/(4a^2); t^2 = N^2 h^2
            return b * c * (bc2 - a * a) * BigRational(4) * a * a ==
                   N * N * heron_16_area_sq(a, b, c) * bc2;
        };
        reg.emplace(f.id, std::move(f));
    }
}

}  // namespace ellsolve::detail
