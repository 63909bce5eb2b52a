#include "ellsolve/families.hpp"

#include <algorithm>

namespace ellsolve::detail {

namespace {

BigRational pow4(const BigRational& x) { return x * x * x * x; }

}  // namespace

void register_power_families(std::map<std::string, FamilyDef>& reg) {
    // ---- A^3 + B^3 = C^3 + D^3, parametric in c ----
    {
        FamilyDef f;
        f.id = "sum_cubes_equal";
        f.param_names = {"c"};
        f.equation = "A^3 + B^3 = C^3 + D^3";
        f.parametric = [](Params& p, const BigRational& k) {
            p["c"] = k;
            const BigRational c = k;
            const BigRational c2 = c * c, c3 = c2 * c, c4 = c2 * c2;
            const BigRational A = c4 + BigRational(8) * c3 - BigRational(6) * c2 - 3;
            const BigRational B =
                BigRational(2) * c4 - BigRational(2) * c3 + BigRational(6) * c2 - BigRational(6) * c;
            const BigRational C = c4 - BigRational(8) * c3 - BigRational(6) * c2 - 3;
            const BigRational D =
                BigRational(2) * c4 + BigRational(2) * c3 + BigRational(6) * c2 + BigRational(6) * c;
            return Tuple{{"A", A}, {"B", B}, {"C", C}, {"D", D}};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational c = param(p, "c");
            const BigRational A = t.at("A"), B = t.at("B"), C = t.at("C"), D = t.at("D");
            const BigRational lhs = A * A * A + B * B * B;
            if (lhs != C * C * C + D * D * D) return false;
            // the common value has the stated closed form
            const BigRational c2 = c * c;
            return lhs == BigRational(9) * (c2 - 1) * (c2 - 1) * (c2 - 1) *
                              (c2 * c2 * c2 + BigRational(33) * c2 * c2 + BigRational(27) * c2 +
                               3);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- A^4 + B^4 = C^4 + D^4, parametric in b ----
    {
        FamilyDef f;
        f.id = "euler_quartic";
        f.param_names = {"b"};
        f.equation = "A^4 + B^4 = C^4 + D^4";
        f.validate = [](const Params& p) {
            const BigRational b = param(p, "b");
            if (sign_of(b) == 0 || b == 1 || b == -1)
                throw SingularParams("singular when b = 0, +-1");
        };
        f.curve = [](const Params& p) {
            const BigRational b = param(p, "b");
            const BigRational b2 = b * b, b4 = b2 * b2, b8 = b4 * b4;
            return CurveQ(BigRational(0), BigRational(-3) * b4, -b2 * (b8 + 1));
        };
        f.parametric = [](Params& p, const BigRational& k) {
            if (sign_of(k) == 0 || k == 1 || k == -1)
                throw std::invalid_argument("degenerate b: 0, +-1");
            p["b"] = k;
            const BigRational b = k;
            const BigRational b2 = b * b, b3 = b2 * b, b4 = b2 * b2, b5 = b4 * b, b6 = b4 * b2;
            const BigRational A =
                (b - 1) * (b6 + BigRational(9) * b5 - BigRational(8) * b4 - BigRational(6) * b3 -
                           BigRational(23) * b2 - BigRational(3) * b - 2);
            const BigRational B =
                (b + 1) * (BigRational(2) * b6 - BigRational(3) * b5 + BigRational(23) * b4 -
                           BigRational(6) * b3 + BigRational(8) * b2 + BigRational(9) * b - 1);
            const BigRational C =
                (b - 1) * (BigRational(2) * b6 + BigRational(3) * b5 + BigRational(23) * b4 +
                           BigRational(6) * b3 + BigRational(8) * b2 - BigRational(9) * b - 1);
            const BigRational D =
                -(b + 1) * (b6 - BigRational(9) * b5 - BigRational(8) * b4 + BigRational(6) * b3 -
                            BigRational(23) * b2 + BigRational(3) * b - 2);
            auto v = primitive({A, B, C, D}, 0);
            return Tuple{{"A", v[0]}, {"B", v[1]}, {"C", v[2]}, {"D", v[3]}};
        };
        f.verify = [](const Params&, const Tuple& t) {
            return pow4(t.at("A")) + pow4(t.at("B")) == pow4(t.at("C")) + pow4(t.at("D"));
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- order-4 multigrade seeds: A+B = C+D+E, A^3+B^3 = C^3+D^3+E^3 ----
    {
        FamilyDef f;
        f.id = "multigrade4";
        f.param_names = {"C", "D"};
        f.equation = "A + B = C + D + E and A^3 + B^3 = C^3 + D^3 + E^3";
        f.validate = [](const Params& p) {
            const BigRational C = param(p, "C"), D = param(p, "D");
            if (sign_of(C) == 0 || sign_of(D) == 0 || C == D)
                throw SingularParams("need C, D nonzero and distinct");
        };
        f.curve = [](const Params& p) {
            const BigRational C = param(p, "C"), D = param(p, "D");
            const BigRational s2 = BigRational(4) * (C + D) * (C + D);
            return CurveQ(s2, BigRational(4) * C * D * s2, BigRational(4) * C * C * D * D * s2);
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational C = param(p, "C"), D = param(p, "D");
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: B = (v - 4CD(C+D))/(2u) needs u != 0"};
            const BigRational B =
                (pt.y - BigRational(4) * C * D * (C + D)) / (BigRational(2) * pt.x);
            // (B-C-D) A^2 + (B-C-D)^2 A - (B-C)(B-D)(C+D) = 0
            const BigRational lead = B - C - D;
            if (sign_of(lead) == 0) return Rejection{"degenerate: B = C + D"};
            const auto roots = quadratic_roots(lead, lead * lead, -(B - C) * (B - D) * (C + D));
            if (roots.empty()) return Rejection{"A-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& A : roots) {
                const BigRational E = A + B - C - D;
                Candidate cand;
                cand.tuple = Tuple{{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", E}};
                const bool trivial = A == C || A == D || B == C || B == D || sign_of(A) == 0 ||
                                     sign_of(B) == 0 || sign_of(E) == 0;
                cand.filter_status = trivial ? "trivial-permutation" : "multigrade-seed";
                out.push_back(std::move(cand));
            }
            return out;
        };
        f.verify = [](const Params&, const Tuple& t) {
            const BigRational A = t.at("A"), B = t.at("B"), C = t.at("C"), D = t.at("D"),
                              E = t.at("E");
            return A + B == C + D + E &&
                   A * A * A + B * B * B == C * C * C + D * D * D + E * E * E;
        };
        f.parametric = [](Params& p, const BigRational& k) {
            // the one-parameter family with D normalized to 1
            const BigRational A = BigRational(2) * (k * k - BigRational(2) * k - 35);
            const BigRational B = BigRational(3) * (BigRational(5) * k - 2);
            const BigRational C = BigRational(-3) * (k * k + BigRational(4) * k + 22);
            const BigRational D = BigRational(3) * (k * k - 16);
            const BigRational E = (k + 2) * (BigRational(2) * k + 19);
            if (sign_of(C) == 0 || sign_of(D) == 0 || C == D)
                throw std::invalid_argument("degenerate k");
            p["C"] = C;
            p["D"] = D;
            return Tuple{{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", E}};
        };
        f.meta.expected_torsion = "Z/3";
        reg.emplace(f.id, std::move(f));
    }

    // ---- z^2 = x^4 + M x^2 y^2 + N y^4 ----
    {
        FamilyDef f;
        f.id = "simple_quartic";
        f.param_names = {"M", "N"};
        f.equation = "z^2 = x^4 + M x^2 y^2 + N y^4";
        f.validate = [](const Params& p) {
            const BigRational M = param(p, "M"), N = param(p, "N");
            if (M * M == BigRational(4) * N)
                throw SingularParams("degenerate: the quartic is a perfect square");
            if (sign_of(N) == 0) throw SingularParams("N = 0 degenerates to a quadratic");
        };
        f.curve = [](const Params& p) {
            const BigRational M = param(p, "M"), N = param(p, "N");
            return CurveQ(BigRational(-2) * M, M * M - BigRational(4) * N, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational M = param(p, "M"), N = param(p, "N");
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: x/y = v/(2u) needs u != 0"};
            const BigRational r = pt.y / (BigRational(2) * pt.x);
            const BigRational x = abs(BigRational(r.get_num()));
            const BigRational y(r.get_den());
            const auto z =
                rational_square_root(pow4(x) + M * x * x * y * y + N * pow4(y));
            if (!z) return Rejection{"mapped value fails the square condition"};
            Candidate c;
            c.tuple = Tuple{{"x", x}, {"y", y}, {"z", *z}};
            c.filter_status = sign_of(x) == 0 ? "trivial x = 0" : "pair";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational M = param(p, "M"), N = param(p, "N");
            const BigRational x = t.at("x"), y = t.at("y");
            if (sign_of(y) == 0) return false;
            return t.at("z") * t.at("z") == pow4(x) + M * x * x * y * y + N * pow4(y);
        };
        f.meta.expected_torsion = "";
        reg.emplace(f.id, std::move(f));
    }

    // ---- (x^2 - y^2)(z^2 - w^2) = N x y z w ----
    {
        FamilyDef f;
        f.id = "prod_diff";
        f.param_names = {"N"};
        f.equation = "(x^2 - y^2)(z^2 - w^2) = N x y z w";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0) throw SingularParams("N must be nonzero");
            if (N == 4 || N == -4)
                throw SingularParams("excluded: the quartic degenerates to a perfect square");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(16) + N * N, BigRational(16) * N * N, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity maps to h = 0"};
            const BigRational den = BigRational(4) * (pt.x + N * N);
            if (sign_of(den) == 0) return Rejection{"pole at U = -N^2"};
            const BigRational h = pt.y / den;  // z/w
            if (sign_of(h) == 0 || h == 1 || h == -1)
                return Rejection{"torsion-trivial: h in {0, +-1}"};
            // g^2 + (h N/(1-h^2)) g - 1 = 0; both roots satisfy (g-1/g)(h-1/h) = N
            const auto roots =
                quadratic_roots(BigRational(1), h * N / (BigRational(1) - h * h), BigRational(-1));
            if (roots.empty()) return Rejection{"g-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& g : roots) {
                if (sign_of(g) == 0) continue;
                out.push_back({Tuple{{"x", BigRational(g.get_num())},
                                     {"y", BigRational(g.get_den())},
                                     {"z", BigRational(h.get_num())},
                                     {"w", BigRational(h.get_den())}},
                               "product"});
            }
            if (out.empty()) return Rejection{"all sign choices vanish"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            return out;
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational x = t.at("x"), y = t.at("y"), z = t.at("z"), w = t.at("w");
            if (sign_of(x * y * z * w) == 0) return false;
            return (x * x - y * y) * (z * z - w * w) == N * x * y * z * w;
        };
        f.meta.expected_torsion = "Z/2+Z/4";
        reg.emplace(f.id, std::move(f));
    }

    // ---- (x^2 - y^2)(z^2 + w^2) = N x y z w ----
    {
        FamilyDef f;
        f.id = "prod_mixed";
        f.param_names = {"N"};
        f.equation = "(x^2 - y^2)(z^2 + w^2) = N x y z w";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") == 0) throw SingularParams("N must be nonzero");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(32) + N * N, BigRational(16) * (N * N + 16),
                          BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity maps to h = 0"};
            const BigRational den = BigRational(4) * (pt.x + N * N + 16);
            if (sign_of(den) == 0) return Rejection{"pole at U = -N^2 - 16"};
            const BigRational h = pt.y / den;  // z/w
            if (sign_of(h) == 0) return Rejection{"torsion-trivial: h = 0"};
            // g^2 - (N h/(h^2+1)) g - 1 = 0; both roots satisfy (g-1/g)(h+1/h) = N
            const auto roots = quadratic_roots(BigRational(1), -N * h / (h * h + 1),
                                               BigRational(-1));
            if (roots.empty()) return Rejection{"g-quadratic has no rational root"};
            std::vector<Candidate> out;
            for (const auto& g : roots) {
                if (sign_of(g) == 0) continue;
                out.push_back({Tuple{{"x", BigRational(g.get_num())},
                                     {"y", BigRational(g.get_den())},
                                     {"z", BigRational(h.get_num())},
                                     {"w", BigRational(h.get_den())}},
                               "product"});
            }
            if (out.empty()) return Rejection{"all sign choices vanish"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            return out;
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational x = t.at("x"), y = t.at("y"), z = t.at("z"), w = t.at("w");
            if (sign_of(x * y * z * w) == 0) return false;
            return (x * x - y * y) * (z * z + w * w) == N * x * y * z * w;
        };
        f.meta.expected_torsion = "Z/2+Z/4";
        reg.emplace(f.id, std::move(f));
    }

    // ---- (x^2 + y^2)(z^2 + w^2) = N x y z w: quartic search only ----
    {
        FamilyDef f;
        f.id = "prod_sum";
        f.param_names = {"N"};
        f.equation = "(x^2 + y^2)(z^2 + w^2) = N x y z w";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0) throw SingularParams("N must be nonzero");
            if (N == 4 || N == -4)
                throw SingularParams("excluded: the quartic degenerates to a perfect square");
        };
        f.quartic = [](const Params& p) {
            const BigRational N = param(p, "N");
            // -4 h^4 + (N^2 - 8) h^2 - 4 must be a square
            return QuarticModel(BigRational(-4), BigRational(0), N * N - 8, BigRational(0),
                                BigRational(-4));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            // pt carries a quartic solution (h, D)
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"no quartic value"};
            const BigRational h = pt.x, D = pt.y;
            if (sign_of(h) == 0) return Rejection{"trivial h = 0"};
            std::vector<Candidate> out;
            // g = (N h +- D) / (2 (h^2 + 1)); both close (g + 1/g)(h + 1/h) = N
            for (const BigRational& g :
                 {BigRational((N * h + D) / (BigRational(2) * (h * h + 1))),
                  BigRational((N * h - D) / (BigRational(2) * (h * h + 1)))}) {
                if (sign_of(g) == 0) continue;
                out.push_back({Tuple{{"x", BigRational(g.get_num())},
                                     {"y", BigRational(g.get_den())},
                                     {"z", BigRational(h.get_num())},
                                     {"w", BigRational(h.get_den())}},
                               "product"});
            }
            if (out.empty()) return Rejection{"trivial g"};
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const Candidate& a, const Candidate& b) {
                                      return a.tuple == b.tuple;
                                  }),
                      out.end());
            return out;
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational x = t.at("x"), y = t.at("y"), z = t.at("z"), w = t.at("w");
            if (sign_of(x * y * z * w) == 0) return false;
            return (x * x + y * y) * (z * z + w * w) == N * x * y * z * w;
        };
        reg.emplace(f.id, std::move(f));
    }
}

}  // namespace ellsolve::detail
