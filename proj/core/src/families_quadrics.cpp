#include "ellsolve/families.hpp"

#include <algorithm>

namespace ellsolve::detail {

namespace {

// Shared scaffolding for the x^2 + .. x y + .. y^2 = square pairs: a curve, a
// map from a point to the ratio y/x, and the two quadratic forms to verify.
struct QuadraticPair {
    std::string id;
    std::string equation;
    // quadric values as functions of (x, y)
    std::function<BigRational(const BigRational&, const BigRational&, const Params&)> q1, q2;
    std::function<CurveQ(const Params&)> curve;
    // y/x from a curve point; empty optional = pole/trivial
    std::function<std::optional<BigRational>(const Params&, const PointQ&)> ratio;
    // y -> -y swaps the two quadrics, so y >= 0 is canonical
    bool sign_symmetric = false;
    std::function<void(const Params&)> validate;
    std::function<Tuple(Params&, const BigRational&)> parametric;
    std::vector<NamedIsogeny> isogenies;
    std::string torsion;
    std::function<BigRational(const Params&)> disc;
};

FamilyDef make_pair_family(QuadraticPair spec) {
    FamilyDef f;
    f.id = spec.id;
    f.param_names = {"N"};
    f.equation = spec.equation;
    f.validate = spec.validate;
    f.curve = spec.curve;
    auto q1 = spec.q1, q2 = spec.q2;
    auto ratio = spec.ratio;
    const bool sym = spec.sign_symmetric;
    f.candidates = [q1, q2, ratio, sym](const Params& p, const PointQ& pt) -> CandidateOutcome {
        if (pt.infinity) return Rejection{"infinity maps to the trivial ratio"};
        const auto r = ratio(p, pt);
        if (!r) return Rejection{"torsion-trivial or pole of the ratio map"};
        if (sign_of(*r) == 0) return Rejection{"trivial solution with y = 0"};
        BigRational x(r->get_den()), y(r->get_num());
        if (sym && sign_of(y) < 0) y = -y;
        const auto z = rational_square_root(q1(x, y, p));
        const auto w = rational_square_root(q2(x, y, p));
        if (!z || !w) return Rejection{"mapped pair fails the square conditions"};
        Candidate c;
        c.tuple = Tuple{{"x", x}, {"y", y}, {"z", *z}, {"w", *w}};
        c.filter_status = "pair";
        return std::vector<Candidate>{c};
    };
    f.verify = [q1, q2](const Params& p, const Tuple& t) {
        const BigRational x = t.at("x"), y = t.at("y");
        // degenerate hits with any vanishing value count as trivial
        if (sign_of(x) == 0 || sign_of(y) == 0 || sign_of(t.at("z")) == 0 ||
            sign_of(t.at("w")) == 0)
            return false;
        return t.at("z") * t.at("z") == q1(x, y, p) && t.at("w") * t.at("w") == q2(x, y, p);
    };
    f.parametric = spec.parametric;
    f.isogenies = std::move(spec.isogenies);
    f.meta.expected_torsion = spec.torsion;
    f.meta.closed_discriminant = spec.disc;
    return f;
}

void not_singular_two(const Params& p) {
    const BigInt N = param_int(p, "N");
    if (N == 2 || N == -2) throw SingularParams("singular when N = +-2");
}

Tuple pair_tuple_from_xy(const Params& p, BigRational x, BigRational y,
                         const std::function<BigRational(const BigRational&, const BigRational&,
                                                         const Params&)>& q1,
                         const std::function<BigRational(const BigRational&, const BigRational&,
                                                         const Params&)>& q2) {
    const auto z = rational_square_root(q1(x, y, p));
    const auto w = rational_square_root(q2(x, y, p));
    if (!z || !w) throw std::logic_error("parametric pair fails the square conditions");
    return Tuple{{"x", x}, {"y", y}, {"z", *z}, {"w", *w}};
}

}  // namespace

void register_quadric_families(std::map<std::string, FamilyDef>& reg) {
    // ---- concordant forms x^2 + M y^2 and x^2 + N y^2 both square ----
    {
        FamilyDef f;
        f.id = "concordant";
        f.param_names = {"M", "N"};
        f.equation = "x^2 + M y^2 = z^2 and x^2 + N y^2 = w^2, y != 0";
        f.validate = [](const Params& p) {
            const BigRational M = param(p, "M");
            const BigRational N = param(p, "N");
            if (N.get_den() != 1) throw std::invalid_argument("N must be an integer");
            if (M.get_den() != 1 && M * N != 1)
                throw std::invalid_argument("M must be an integer (or 1/N)");
            if (sign_of(M) == 0 || sign_of(N) == 0 || M == N)
                throw SingularParams("need M != N and M N != 0");
        };
        auto is_recip = [](const Params& p) {
            return param(p, "M").get_den() != 1;  // validated to be 1/N
        };
        f.curve = [is_recip](const Params& p) {
            const BigRational N = param(p, "N");
            if (is_recip(p)) {
                // (N, 1/N) realized through (N^3, N): V^2 = U(U + N)(U + N^3)
                const BigRational M = N * N * N;
                return CurveQ(M + N, M * N, BigRational(0));
            }
            const BigRational M = param(p, "M");
            return CurveQ(M + N, M * N, BigRational(0));
        };
        f.candidates = [is_recip](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            const BigRational M = param(p, "M");
            if (pt.infinity) return Rejection{"infinity maps to the trivial solution"};
            BigRational num, den;
            if (is_recip(p)) {
                // y/x = 2NV / (N^4 - U^2)
                den = N * N * N * N - pt.x * pt.x;
                num = BigRational(2) * N * pt.y;
            } else {
                den = M * N - pt.x * pt.x;
                num = BigRational(2) * pt.y;
            }
            if (sign_of(den) == 0) return Rejection{"pole: H^2 = MN"};
            const BigRational r = num / den;
            if (sign_of(r) == 0) return Rejection{"torsion-trivial: y = 0"};
            BigRational x(r.get_den()), y(abs(r.get_num()));
            const auto z = rational_square_root(x * x + M * y * y);
            const auto w = rational_square_root(x * x + N * y * y);
            if (!z || !w) return Rejection{"mapped pair fails the square conditions"};
            Candidate c;
            c.tuple = Tuple{{"x", x}, {"y", y}, {"z", *z}, {"w", *w}};
            c.filter_status = "pair";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational M = param(p, "M"), N = param(p, "N");
            const BigRational x = t.at("x"), y = t.at("y");
            if (sign_of(y) == 0) return false;
            return t.at("z") * t.at("z") == x * x + M * y * y &&
                   t.at("w") * t.at("w") == x * x + N * y * y;
        };
        {
            auto curve = f.curve;
            f.isogenies.push_back({"2-isogeny", [curve](const Params& p) {
                                       return isogeny2(curve(p));
                                   }});
        }
        f.meta.expected_torsion = "Z/2+Z/2";
        f.meta.closed_discriminant = [is_recip](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            const BigRational M = is_recip(p) ? BigRational(N * N * N) : param(p, "M");
            return BigRational(16) * M * M * N * N * (M - N) * (M - N);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- x^2 + N y^2 = (N+1) z^2 and x^2 + (N+1) y^2 = (N+2) w^2 ----
    {
        FamilyDef f;
        f.id = "lucas_gerono";
        f.param_names = {"N"};
        f.equation = "x^2 + N y^2 = (N+1) z^2 and x^2 + (N+1) y^2 = (N+2) w^2, |x| != |y|";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0 || N == -1 || N == -2) throw SingularParams("degenerate N");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            const BigRational c2 = N * N + BigRational(3) * N + 2;
            // G^2 = H (H + c2)(H - N c2)
            return CurveQ(c2 * (BigRational(1) - N), -N * c2 * c2, BigRational(0));
        };
        auto xy_from_k = [](const BigRational& N, const BigRational& k)
            -> std::optional<std::pair<BigRational, BigRational>> {
            const BigRational den = k * k * (N + 1) - N;
            if (sign_of(den) == 0) return std::nullopt;
            const BigRational X = (k * k * (N + 1) - BigRational(2) * k * (N + 1) + N) / den;
            return std::make_pair(BigRational(X.get_den()), BigRational(X.get_num()));
        };
        f.candidates = [xy_from_k](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity maps to the trivial solution"};
            const BigRational den = (pt.x + N + 1) * (N + 1) * (N + 2);
            if (sign_of(den) == 0) return Rejection{"pole at H = -(N+1)"};
            const BigRational k = (pt.y + (N + 1) * (N + 1) * pt.x) / den;
            const auto xy = xy_from_k(N, k);
            if (!xy) return Rejection{"pole of the chord parameterization"};
            auto [x, y] = *xy;
            if (abs(x) == abs(y)) return Rejection{"trivial solution |x| = |y|"};
            const auto z = rational_square_root((x * x + N * y * y) / (N + 1));
            const auto w = rational_square_root((x * x + (N + 1) * y * y) / (N + 2));
            if (!z || !w) return Rejection{"mapped pair fails the square conditions"};
            Candidate c;
            c.tuple = Tuple{{"x", x}, {"y", y}, {"z", *z}, {"w", *w}};
            c.filter_status = "pair";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational x = t.at("x"), y = t.at("y");
            if (abs(x) == abs(y)) return false;
            return x * x + N * y * y == (N + 1) * t.at("z") * t.at("z") &&
                   x * x + (N + 1) * y * y == (N + 2) * t.at("w") * t.at("w");
        };
        f.parametric = [](Params& p, const BigRational& k) {
            // degree-4 family in N itself, from the non-torsion point (-(N+1), (N+1)^3)
            if (k.get_den() != 1) throw std::invalid_argument("parametric index is N itself");
            p["N"] = k;
            const BigRational N = k;
            const BigRational y = N * N * N * N + BigRational(2) * N * N * N -
                                  BigRational(5) * N * N - BigRational(14) * N - 7;
            const BigRational x = BigRational(3) * N * N * N * N + BigRational(14) * N * N * N +
                                  BigRational(21) * N * N + BigRational(10) * N - 1;
            const auto z = rational_square_root((x * x + N * y * y) / (N + 1));
            const auto w = rational_square_root((x * x + (N + 1) * y * y) / (N + 2));
            if (!z || !w) throw std::logic_error("degree-4 family fails the square conditions");
            return Tuple{{"x", x}, {"y", y}, {"z", *z}, {"w", *w}};
        };
        f.meta.expected_torsion = "Z/2+Z/2";
        reg.emplace(f.id, std::move(f));
    }

    // ---- x^2 + e xy + f y^2 and x^2 + g xy + h y^2 both square ----
    {
        FamilyDef f;
        f.id = "two_quadrics";
        f.param_names = {"e", "f", "g", "h"};
        f.equation = "x^2 + e xy + f y^2 = z^2 and x^2 + g xy + h y^2 = w^2";
        f.validate = [](const Params& p) {
            const BigRational e = param(p, "e"), ff = param(p, "f"), g = param(p, "g"),
                              h = param(p, "h");
            if (e * e == BigRational(4) * ff || g * g == BigRational(4) * h)
                throw SingularParams("a quadric is a perfect square (e^2 = 4f or g^2 = 4h)");
            if ((ff - h) * (ff - h) + (e - g) * (e * h - ff * g) == 0)
                throw SingularParams("singular: (f-h)^2 + (e-g)(eh-fg) = 0");
        };
        f.curve = [](const Params& p) {
            const BigRational e = param(p, "e"), ff = param(p, "f"), g = param(p, "g"),
                              h = param(p, "h");
            return CurveQ(BigRational(2) * (BigRational(2) * (ff + h) - e * g),
                          (e * e - BigRational(4) * ff) * (g * g - BigRational(4) * h),
                          BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational e = param(p, "e"), ff = param(p, "f"), g = param(p, "g"),
                              h = param(p, "h");
            if (pt.infinity) return Rejection{"infinity maps to the trivial solution"};
            const BigRational g4 = g * g - BigRational(4) * h;
            const BigRational den = BigRational(2) * (g4 - pt.x);
            if (sign_of(den) == 0) return Rejection{"pole at u = g^2 - 4h"};
            const BigRational m = (e * g4 - g * pt.x - pt.y) / den;  // p/q
            const BigRational pp(m.get_num()), qq(m.get_den());
            BigRational x = pp * pp - ff * qq * qq;
            BigRational y = qq * (e * qq - BigRational(2) * pp);
            if (sign_of(y) == 0) return Rejection{"trivial solution with y = 0"};
            auto v = primitive({x, y}, 0);
            x = v[0];
            y = v[1];
            const auto z = rational_square_root(x * x + e * x * y + ff * y * y);
            const auto w = rational_square_root(x * x + g * x * y + h * y * y);
            if (!z || !w) return Rejection{"mapped pair fails the square conditions"};
            Candidate c;
            c.tuple = Tuple{{"x", x}, {"y", y}, {"z", *z}, {"w", *w}};
            c.filter_status = "pair";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational e = param(p, "e"), ff = param(p, "f"), g = param(p, "g"),
                              h = param(p, "h");
            const BigRational x = t.at("x"), y = t.at("y");
            if (sign_of(y) == 0) return false;
            return t.at("z") * t.at("z") == x * x + e * x * y + ff * y * y &&
                   t.at("w") * t.at("w") == x * x + g * x * y + h * y * y;
        };
        f.parametric = [](Params& p, const BigRational&) {
            // closed form from u = e^2 - 4f, v = -(e-g)(e^2-4f)
            const BigRational e = param(p, "e"), ff = param(p, "f"), g = param(p, "g"),
                              h = param(p, "h");
            if (e == g || e * e - BigRational(4) * ff == g * g - BigRational(4) * h)
                throw std::invalid_argument("degenerate: e = g or e^2 - 4f = g^2 - 4h");
            const BigRational x =
                e * e * e * e - BigRational(4) * g * e * e * e -
                BigRational(2) * (BigRational(4) * ff - BigRational(3) * g * g + BigRational(4) * h) *
                    e * e +
                BigRational(4) * g * (BigRational(4) * ff - g * g + BigRational(4) * h) * e +
                BigRational(16) * ff * ff - BigRational(8) * ff * (g * g + BigRational(4) * h) +
                (g * g - BigRational(4) * h) * (g * g - BigRational(4) * h);
            const BigRational y = BigRational(8) * (e - g) *
                                  (e * e - BigRational(4) * ff - g * g + BigRational(4) * h);
            auto v = primitive({x, y}, 0);
            const auto z =
                rational_square_root(v[0] * v[0] + e * v[0] * v[1] + ff * v[1] * v[1]);
            const auto w = rational_square_root(v[0] * v[0] + g * v[0] * v[1] + h * v[1] * v[1]);
            if (!z || !w) throw std::logic_error("closed form fails the square conditions");
            return Tuple{{"x", v[0]}, {"y", v[1]}, {"z", *z}, {"w", *w}};
        };
        f.meta.expected_torsion = "Z/2";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational e = param(p, "e"), ff = param(p, "f"), g = param(p, "g"),
                              h = param(p, "h");
            const BigRational A = e * e - BigRational(4) * ff, B = g * g - BigRational(4) * h;
            return BigRational(256) * A * A * B * B *
                   ((ff - h) * (ff - h) + (e - g) * (e * h - ff * g));
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- the |e| = |g| = 1 and |e| = |g| = N specializations ----
    auto N_of = [](const Params& p) { return param(p, "N"); };

    // x^2+xy+y^2, x^2+xy+Ny^2
    reg.emplace("dd100", make_pair_family({
        .id = "dd100",
        .equation = "x^2 + xy + y^2 = z^2 and x^2 + xy + N y^2 = w^2",
        .q1 = [](const BigRational& x, const BigRational& y, const Params&) -> BigRational {
            return x * x + x * y + y * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + x * y + N_of(p) * y * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(2) * (BigRational(2) * N + 1), BigRational(12) * N - 3,
                          BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            const BigRational den0 = pt.x + BigRational(4) * N - 1;
            if (sign_of(den0) == 0) return std::nullopt;
            const BigRational m = (pt.y + pt.x + BigRational(4) * N - 1) /
                                  (BigRational(2) * den0);
            const BigRational den = m * m - 1;
            if (sign_of(den) == 0) return std::nullopt;
            return BigRational((BigRational(1) - BigRational(2) * m) / den); },
        .validate = [](const Params& p) {
            if (param_int(p, "N") == 1) throw SingularParams("singular when N = 1"); },
        .parametric = [](Params& p, const BigRational& k) {
            const BigRational N = BigRational(3) * k * k - 2;
            if (p.count("N") && p.at("N") != N)
                throw std::invalid_argument("k fixes N = 3k^2 - 2");
            if (N == 1) throw std::invalid_argument("degenerate k: N = 1");
            p["N"] = N;
            auto v = primitive({k * k + BigRational(2) * k - 3, BigRational(-4) * k}, 0);
            const auto z = rational_square_root(v[0] * v[0] + v[0] * v[1] + v[1] * v[1]);
            const auto w = rational_square_root(v[0] * v[0] + v[0] * v[1] + N * v[1] * v[1]);
            if (!z || !w) throw std::logic_error("parametric pair fails");
            return Tuple{{"x", v[0]}, {"y", v[1]}, {"z", *z}, {"w", *w}}; },
        .torsion = "Z/2+Z/2",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(256) * BigRational(9) * (N - 1) * (N - 1) *
                   (BigRational(4) * N - 1) * (BigRational(4) * N - 1); },
    }));

    // x^2+xy+Ny^2, x^2+xy-Ny^2
    reg.emplace("dd110", make_pair_family({
        .id = "dd110",
        .equation = "x^2 + xy + N y^2 = z^2 and x^2 + xy - N y^2 = w^2",
        .q1 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + x * y + N_of(p) * y * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + x * y - N_of(p) * y * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(-2), BigRational(1) - BigRational(16) * N * N,
                          BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            const BigRational den0 = pt.x - (BigRational(1) + BigRational(4) * N);
            if (sign_of(den0) == 0) return std::nullopt;
            const BigRational m =
                (pt.y + pt.x - (BigRational(1) + BigRational(4) * N)) / (BigRational(2) * den0);
            const BigRational den = m * m - N;
            if (sign_of(den) == 0) return std::nullopt;
            return BigRational((BigRational(1) - BigRational(2) * m) / den); },
        .validate = [](const Params& p) {
            if (param_int(p, "N") == 0) throw SingularParams("singular when N = 0"); },
        .parametric = [](Params& p, const BigRational& k) {
            const BigRational N =
                BigRational(6) * k * k + BigRational(6) * k + 2;
            if (p.count("N") && p.at("N") != N)
                throw std::invalid_argument("k fixes N = 6k^2 + 6k + 2");
            p["N"] = N;
            auto v = primitive({BigRational(5) * k * k + BigRational(6) * k + 2,
                                -(BigRational(2) * k + 1)}, 0);
            const auto z = rational_square_root(v[0] * v[0] + v[0] * v[1] + N * v[1] * v[1]);
            const auto w = rational_square_root(v[0] * v[0] + v[0] * v[1] - N * v[1] * v[1]);
            if (!z || !w) throw std::logic_error("parametric pair fails");
            return Tuple{{"x", v[0]}, {"y", v[1]}, {"z", *z}, {"w", *w}}; },
        .torsion = "Z/2+Z/2",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(1024) * N * N * (BigRational(4) * N + 1) *
                   (BigRational(4) * N + 1) * (BigRational(4) * N - 1) *
                   (BigRational(4) * N - 1); },
    }));

    // x^2+xy+Ny^2, x^2-xy+Ny^2
    reg.emplace("dd10", make_pair_family({
        .id = "dd10",
        .equation = "x^2 + xy + N y^2 = z^2 and x^2 - xy + N y^2 = w^2",
        .q1 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + x * y + N_of(p) * y * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x - x * y + N_of(p) * y * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(2) * (BigRational(4) * N + 1),
                          (BigRational(4) * N - 1) * (BigRational(4) * N - 1), BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            const BigRational den0 = pt.x + BigRational(4) * N - 1;
            if (sign_of(den0) == 0) return std::nullopt;
            const BigRational m = (pt.y - pt.x + BigRational(4) * N - 1) /
                                  (BigRational(2) * den0);
            const BigRational den = m * m - N;
            if (sign_of(den) == 0) return std::nullopt;
            return BigRational((BigRational(1) - BigRational(2) * m) / den); },
        .sign_symmetric = true,
        .validate = [](const Params& p) { param_int(p, "N"); },
        .torsion = "Z/4",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            const BigRational b = (BigRational(4) * N - 1) * (BigRational(4) * N - 1);
            const BigRational a = BigRational(2) * (BigRational(4) * N + 1);
            return BigRational(16) * (a * a - BigRational(4) * b) * b * b; },
    }));

    // x^2+Nxy = z^2, x^2+Nxy+y^2 = w^2
    reg.emplace("dd50", make_pair_family({
        .id = "dd50",
        .equation = "x^2 + N xy = z^2 and x^2 + N xy + y^2 = w^2",
        .q1 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + N_of(p) * x * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + N_of(p) * x * y + y * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            // v^2 = u(u - N^2)(u - N^2 + 4)
            return CurveQ(BigRational(4) - BigRational(2) * N * N, N * N * (N * N - 4),
                          BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            const BigRational den0 = pt.x + BigRational(4) - N * N;
            if (sign_of(den0) == 0) return std::nullopt;
            const BigRational m =
                (pt.y + N * pt.x - N * (N * N - 4)) / (BigRational(2) * den0);
            if (sign_of(m) == 0) return std::nullopt;
            return BigRational((N - BigRational(2) * m) / (m * m)); },
        .validate = not_singular_two,
        .torsion = "Z/2+Z/4",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(256) * N * N * N * N * (N + 2) * (N + 2) * (N - 2) * (N - 2); },
    }));

    // x^2+Nxy+y^2, x^2-Nxy+y^2
    reg.emplace("dd3", make_pair_family({
        .id = "dd3",
        .equation = "x^2 + N xy + y^2 = z^2 and x^2 - N xy + y^2 = w^2",
        .q1 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + N_of(p) * x * y + y * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x - N_of(p) * x * y + y * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(2) * (N * N + 4), (N * N - 4) * (N * N - 4),
                          BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            const BigRational den0 = pt.x + BigRational(4) - N * N;
            if (sign_of(den0) == 0) return std::nullopt;
            const BigRational m =
                (pt.y - N * pt.x + N * (BigRational(4) - N * N)) / (BigRational(2) * den0);
            const BigRational den = m * m - 1;
            if (sign_of(den) == 0) return std::nullopt;
            return BigRational((N - BigRational(2) * m) / den); },
        .sign_symmetric = true,
        .validate = not_singular_two,
        .torsion = "Z/2+Z/4",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            const BigRational t = (N + 2) * (N - 2);
            return BigRational(1024) * N * N * t * t * t * t; },
    }));

    // x^2+Nxy+y^2, x^2+Nxy-y^2
    reg.emplace("dd120", make_pair_family({
        .id = "dd120",
        .equation = "x^2 + N xy + y^2 = z^2 and x^2 + N xy - y^2 = w^2",
        .q1 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + N_of(p) * x * y + y * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + N_of(p) * x * y - y * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(N * N + 12, BigRational(8) * (N * N + 4), BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            if (sign_of(pt.x) == 0) return std::nullopt;
            const BigRational m = (pt.y + N * pt.x) / (BigRational(2) * pt.x);
            const BigRational den = m * m - 1;
            if (sign_of(den) == 0) return std::nullopt;
            return BigRational((N - BigRational(2) * m) / den); },
        .validate = not_singular_two,
        .torsion = "Z/2+Z/2",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(1024) * (N + 2) * (N + 2) * (N - 2) * (N - 2) * (N * N + 4) *
                   (N * N + 4); },
    }));

    // x^2+Nxy+(N+1)y^2, x^2+Nxy+(N-1)y^2
    reg.emplace("dd20", make_pair_family({
        .id = "dd20",
        .equation = "x^2 + N xy + (N+1) y^2 = z^2 and x^2 + N xy + (N-1) y^2 = w^2",
        .q1 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + N_of(p) * x * y + (N_of(p) + 1) * y * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + N_of(p) * x * y + (N_of(p) - 1) * y * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(N * N - BigRational(4) * N + 12,
                          BigRational(8) * (N - 2) * (N - 2), BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            if (sign_of(pt.x) == 0) return std::nullopt;
            const BigRational m = (pt.y + N * pt.x) / (BigRational(2) * pt.x);
            const BigRational den = m * m - N - 1;
            if (sign_of(den) == 0) return std::nullopt;
            return BigRational((N - BigRational(2) * m) / den); },
        .validate = not_singular_two,
        .torsion = "Z/2+Z/2",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            const BigRational s = N * N - BigRational(4) * N - 4, t = (N - 2) * (N - 2);
            return BigRational(1024) * t * t * s * s; },
    }));

    // x^2+2Nxy+Ny^2, x^2-2Nxy+Ny^2
    reg.emplace("dd60", make_pair_family({
        .id = "dd60",
        .equation = "x^2 + 2N xy + N y^2 = z^2 and x^2 - 2N xy + N y^2 = w^2",
        .q1 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + BigRational(2) * N_of(p) * x * y + N_of(p) * y * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x - BigRational(2) * N_of(p) * x * y + N_of(p) * y * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(2) * N * (N + 1), N * N * (N - 1) * (N - 1),
                          BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            const BigRational den0 = pt.x - N * (N - 1);
            if (sign_of(den0) == 0) return std::nullopt;
            const BigRational m = (pt.y - N * pt.x - N * N * (N - 1)) / den0;
            const BigRational den = m * m - N;
            if (sign_of(den) == 0) return std::nullopt;
            return BigRational(BigRational(2) * (N - m) / den); },
        .sign_symmetric = true,
        .validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0 || N == 1) throw SingularParams("singular when N = 0 or 1"); },
        .parametric = [](Params& p, const BigRational& k) {
            const BigRational N = BigRational(4) - k * k;
            if (sign_of(N) == 0 || N == 1)
                throw std::invalid_argument("degenerate k: N in {0, 1}");
            if (p.count("N") && p.at("N") != N)
                throw std::invalid_argument("k fixes N = 4 - k^2");
            p["N"] = N;
            BigRational x = k * (k * k - 2), y(2);
            auto v = primitive({x, y}, 0);
            const auto z = rational_square_root(v[0] * v[0] +
                                                BigRational(2) * N * v[0] * v[1] +
                                                N * v[1] * v[1]);
            const auto w = rational_square_root(v[0] * v[0] -
                                                BigRational(2) * N * v[0] * v[1] +
                                                N * v[1] * v[1]);
            if (!z || !w) throw std::logic_error("parametric pair fails");
            return Tuple{{"x", v[0]}, {"y", v[1]}, {"z", *z}, {"w", *w}}; },
        .isogenies = {{"4-isogeny", [](const Params& p) {
            const BigRational N = param(p, "N");
            CurveQ e(BigRational(2) * N * (N + 1), N * N * (N - 1) * (N - 1), BigRational(0));
            IsogenyMap m = isogeny4(e);
            scale_target(m, make_rational(1, 2));
            return m; }}},
        .torsion = "Z/4",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            BigRational n7(1);
            for (int i = 0; i < 7; ++i) n7 *= N;
            return BigRational(256) * n7 * (N - 1) * (N - 1) * (N - 1) * (N - 1); },
    }));

    // x^2+Nxy = z^2, y^2-Nxy = w^2
    reg.emplace("dd40", make_pair_family({
        .id = "dd40",
        .equation = "x^2 + N xy = z^2 and y^2 - N xy = w^2",
        .q1 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return x * x + N_of(p) * x * y; },
        .q2 = [N_of](const BigRational& x, const BigRational& y, const Params& p) -> BigRational {
            return y * y - N_of(p) * x * y; },
        .curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(2) * (N * N + 2), N * N * N * N, BigRational(0)); },
        .ratio = [](const Params& p, const PointQ& pt) -> std::optional<BigRational> {
            const BigRational N = param(p, "N");
            const BigRational den = (pt.x + N * N) * (pt.x + N * N);
            if (sign_of(den) == 0) return std::nullopt;
            return BigRational(BigRational(-4) * N * pt.x / den); },
        .validate = [](const Params& p) {
            if (param_int(p, "N") == 0) throw SingularParams("N must be nonzero"); },
        .isogenies = {{"4-isogeny", [](const Params& p) {
            const BigRational N = param(p, "N");
            CurveQ e(BigRational(2) * (N * N + 2), N * N * N * N, BigRational(0));
            return isogeny4(e); }},
          {"16-isogeny", [](const Params& p) {
            const BigRational N = param(p, "N");
            CurveQ e(BigRational(2) * (N * N + 2), N * N * N * N, BigRational(0));
            IsogenyMap m1 = isogeny4(e);
            return compose({m1, isogeny4(m1.target())}); }}},
        .torsion = "Z/4",
        .disc = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            BigRational n8(1);
            for (int i = 0; i < 8; ++i) n8 *= N;
            return BigRational(256) * n8 * (N * N + 1); },
    }));

    // ---- x^2 + (N-1) y^2 = N z^2 and (N-1) x^2 + y^2 = N w^2 ----
    {
        FamilyDef f;
        f.id = "leech_variant";
        f.param_names = {"N"};
        f.equation = "x^2 + (N-1) y^2 = N z^2 and (N-1) x^2 + y^2 = N w^2, |x| != |y|";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0 || N == 1 || N == 2) throw SingularParams("degenerate N");
        };
        f.curve = [](const Params& p) {
            const BigRational M = param(p, "N") - 1;  // the base-ratio curve with N -> N-1
            return CurveQ(M * M + 1, M * M, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity maps to the trivial solution"};
            const BigRational den0 = N * (pt.x + N - 1);
            if (sign_of(den0) == 0) return Rejection{"pole at u = 1 - N"};
            const BigRational m = (pt.y + pt.x + (N - 1) * (N - 1)) / den0;
            const BigRational den = N * (m * m - 1) + 1;
            if (sign_of(den) == 0) return Rejection{"pole of the chord parameterization"};
            const BigRational t = (N * (m - 1) * (m - 1) - 1) / den;  // y/x
            if (sign_of(t) == 0) return Rejection{"trivial solution with y = 0"};
            BigRational x(t.get_den()), y(abs(t.get_num()));
            if (abs(x) == abs(y)) return Rejection{"trivial solution |x| = |y|"};
            const auto z = rational_square_root((x * x + (N - 1) * y * y) / N);
            const auto w = rational_square_root(((N - 1) * x * x + y * y) / N);
            if (!z || !w) return Rejection{"mapped pair fails the square conditions"};
            Candidate c;
            c.tuple = Tuple{{"x", x}, {"y", y}, {"z", *z}, {"w", *w}};
            c.filter_status = "pair";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational x = t.at("x"), y = t.at("y");
            if (abs(x) == abs(y)) return false;
            return x * x + (N - 1) * y * y == N * t.at("z") * t.at("z") &&
                   (N - 1) * x * x + y * y == N * t.at("w") * t.at("w");
        };
        f.meta.expected_torsion = "Z/2+Z/4";
        reg.emplace(f.id, std::move(f));
    }

    // ---- a^2 + N b^2 = c^2 and N a^2 + b^2 = d^2 with N = M^2 ----
    {
        FamilyDef f;
        f.id = "piezas";
        f.param_names = {"M"};
        f.equation = "a^2 + (M b)^2 = c^2 and (M a)^2 + b^2 = d^2";
        f.validate = [](const Params& p) {
            const BigInt M = param_int(p, "M");
            if (M == 0 || M == 1 || M == -1)
                throw SingularParams("need |M| > 1 (the curve is singular at M^4 = 1)");
        };
        f.curve = [](const Params& p) {
            const BigRational M = param(p, "M");
            const BigRational M4 = M * M * M * M;
            return CurveQ(M4 + 1, M4, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational M = param(p, "M");
            if (pt.infinity) return Rejection{"infinity maps to the trivial solution"};
            const BigRational den = M * (pt.x + 1);
            if (sign_of(den) == 0) return Rejection{"pole at u = -1"};
            const BigRational k = pt.y / den;
            BigRational a = M * M - k * k;
            BigRational b = BigRational(2) * k;
            if (sign_of(a) == 0 || sign_of(b) == 0)
                return Rejection{"torsion-trivial: a b = 0"};
            auto v = primitive({abs(a), abs(b)});
            a = v[0];
            b = v[1];
            const auto c = rational_square_root(a * a + M * M * b * b);
            const auto d = rational_square_root(M * M * a * a + b * b);
            if (!c || !d) return Rejection{"mapped pair fails the square conditions"};
            Candidate cand;
            cand.tuple = Tuple{{"a", a}, {"b", b}, {"c", *c}, {"d", *d}};
            cand.filter_status = "pair";
            return std::vector<Candidate>{cand};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational M = param(p, "M");
            const BigRational a = t.at("a"), b = t.at("b");
            if (sign_of(a) == 0 || sign_of(b) == 0) return false;
            return a * a + M * M * b * b == t.at("c") * t.at("c") &&
                   M * M * a * a + b * b == t.at("d") * t.at("d");
        };
        f.meta.expected_torsion = "Z/2+Z/4";
        reg.emplace(f.id, std::move(f));
    }
}

}  // namespace ellsolve::detail
