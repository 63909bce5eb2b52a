#include "ellsolve/families.hpp"

#include <algorithm>

namespace ellsolve::detail {

namespace {

// canonical representative for fully symmetric integer triples: primitive,
// sorted ascending, overall sign fixed by a positive sum (falling back to a
// positive largest entry when the sum vanishes)
Tuple symmetric_triple(std::vector<BigRational> v, const char* n0, const char* n1,
                       const char* n2) {
    v = primitive(v);
    std::sort(v.begin(), v.end());
    const BigRational sum = v[0] + v[1] + v[2];
    const bool flip = sign_of(sum) != 0 ? sign_of(sum) < 0 : sign_of(v[2]) < 0;
    if (flip) {
        for (auto& q : v) q = -q;
        std::sort(v.begin(), v.end());
    }
    return Tuple{{n0, v[0]}, {n1, v[1]}, {n2, v[2]}};
}

// canonical representative under cyclic rotation and scaling
Tuple cyclic_triple(std::vector<BigRational> v, const char* n0, const char* n1, const char* n2) {
    v = primitive(v, 0);
    std::vector<BigRational> best = v;
    for (int r = 1; r < 3; ++r) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        auto cand = primitive(v, 0);
        if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
            best = cand;
    }
    return Tuple{{n0, best[0]}, {n1, best[1]}, {n2, best[2]}};
}

// cube-free core: N = core * cube^3
std::pair<BigInt, BigInt> cubefree_split(const BigInt& n) {
    BigInt core = n < 0 ? -1 : 1, cube = 1;
    for (const auto& [p, e] : factorize(n).primes) {
        for (unsigned i = 0; i < e % 3; ++i) core *= p;
        for (unsigned i = 0; i < e / 3; ++i) cube *= p;
    }
    return {core, cube};
}

}  // namespace

void register_cubic_families(std::map<std::string, FamilyDef>& reg) {
    // ---- N = a^3 + b^3 ----
    {
        FamilyDef f;
        f.id = "two_cubes";
        f.param_names = {"N"};
        f.equation = "a^3 + b^3 = N";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") == 0) throw SingularParams("N must be nonzero");
        };
        f.curve = [](const Params& p) {
            // the search happens on the cube-free core
            const auto [core, cube] = cubefree_split(param_int(p, "N"));
            (void)cube;
            const BigRational n1(core);
            return CurveQ(BigRational(0), BigRational(0), BigRational(-432) * n1 * n1);
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const auto [core, cube] = cubefree_split(param_int(p, "N"));
            const BigRational n1(core), n2(cube);
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: c = 12N/h needs h != 0"};
            BigRational a = (BigRational(36) * n1 + pt.y) / (BigRational(6) * pt.x);
            BigRational b = (BigRational(36) * n1 - pt.y) / (BigRational(6) * pt.x);
            a = a * n2;
            b = b * n2;
            if (a < b) std::swap(a, b);
            Candidate c;
            c.tuple = Tuple{{"a", a}, {"b", b}};
            c.filter_status = "pair";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b");
            return a * a * a + b * b * b == N;
        };
        // torsion is trivial except over the cores 1 (Z/3) and 2 (Z/2)
        f.meta.expected_torsion = "";
        reg.emplace(f.id, std::move(f));
    }

    // ---- N = (X+Y+Z)(1/X + 1/Y + 1/Z) ----
    {
        FamilyDef f;
        f.id = "knight";
        f.param_names = {"N"};
        f.equation = "(X+Y+Z)(1/X + 1/Y + 1/Z) = N";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0 || N == 1 || N == 9) throw SingularParams("singular when N = 0, 1, 9");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(N * N - BigRational(6) * N - 3, BigRational(16) * N, BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity gives no finite triple"};
            const BigRational den = BigRational(2) * (pt.x - BigRational(4) * N);
            if (sign_of(den) == 0) return Rejection{"pole at h = 4N (order-6 torsion)"};
            const BigRational X = (pt.y + (N - 1) * pt.x) / den;
            const BigRational Y = (-pt.y + (N - 1) * pt.x) / den;
            if (sign_of(X) == 0 || sign_of(Y) == 0)
                return Rejection{"torsion-trivial: a coordinate vanishes"};
            Candidate c;
            c.tuple = symmetric_triple({X, Y, BigRational(1)}, "X", "Y", "Z");
            for (const auto& [n, v] : c.tuple.entries)
                if (sign_of(v) == 0) return Rejection{"torsion-trivial: a coordinate vanishes"};
            c.filter_status = "triple";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational X = t.at("X"), Y = t.at("Y"), Z = t.at("Z");
            if (sign_of(X) == 0 || sign_of(Y) == 0 || sign_of(Z) == 0) return false;
            return (X + Y + Z) * (Y * Z + X * Z + X * Y) == N * X * Y * Z;
        };
        f.parametric = [](Params& p, const BigRational& k) {
            if (k == 0 || k == 1) throw std::invalid_argument("degenerate k: a coordinate is 0");
            const BigRational N = -(k - 2) * (k + 1);
            if (p.count("N") && p.at("N") != N)
                throw std::invalid_argument("k fixes N = -(k-2)(k+1)");
            p["N"] = N;
            return symmetric_triple({-k * (k - 1), BigRational(1), k - 1}, "X", "Y", "Z");
        };
        {
            auto curve = f.curve;
            f.isogenies.push_back({"2-isogeny", [curve](const Params& p) {
                                       return isogeny2(curve(p));
                                   }});
            f.isogenies.push_back(
                {"6-isogeny", [curve](const Params& p) {
                     const BigRational N = param(p, "N");
                     const CurveQ e = curve(p);
                     IsogenyMap m = velu_map(
                         e, {PointQ(BigRational(0), BigRational(0)),
                             PointQ(BigRational(4), BigRational(4) * (N - 1)),
                             PointQ(BigRational(4) * N, BigRational(4) * N * (N - 1))});
                     shift_target(m, N * N + BigRational(10) * N - 19);
                     return m;
                 }});
        }
        f.meta.expected_torsion = "Z/6";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            return BigRational(4096) * N * N * (N - 9) * (N - 1) * (N - 1) * (N - 1);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- N = (X+Y+Z)^3 / (XYZ) ----
    {
        FamilyDef f;
        f.id = "bga";
        f.param_names = {"N"};
        f.equation = "(X+Y+Z)^3 = N * X*Y*Z";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0 || N == 27) throw SingularParams("singular when N = 0 or 27");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(N * N, BigRational(8) * N * N * N, BigRational(16) * N * N * N * N);
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: X/S = .../(2Nh) needs h != 0"};
            const BigRational den = BigRational(2) * N * pt.x;
            const BigRational X = (pt.y + N * (pt.x + BigRational(4) * N)) / den;
            const BigRational Y = (-pt.y + N * (pt.x + BigRational(4) * N)) / den;
            const BigRational Z = BigRational(1) - X - Y;
            if (sign_of(X) == 0 || sign_of(Y) == 0 || sign_of(Z) == 0)
                return Rejection{"torsion-trivial: a coordinate vanishes"};
            Candidate c;
            c.tuple = symmetric_triple({X, Y, Z}, "X", "Y", "Z");
            c.filter_status = "triple";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational X = t.at("X"), Y = t.at("Y"), Z = t.at("Z");
            if (sign_of(X * Y * Z) == 0) return false;
            const BigRational s = X + Y + Z;
            return s * s * s == N * X * Y * Z;
        };
        f.parametric = [](Params& p, const BigRational& k) {
            if (sign_of(k) == 0) throw std::invalid_argument("k = 0 makes N = 0");
            const BigRational N = -k * k;
            if (N == 27) throw std::invalid_argument("degenerate k");
            if (p.count("N") && p.at("N") != N)
                throw std::invalid_argument("k fixes N = -k^2");
            p["N"] = N;
            return symmetric_triple({BigRational(-1), BigRational(1), k}, "X", "Y", "Z");
        };
        f.meta.expected_torsion = "Z/3";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            BigRational n8(1);
            for (int i = 0; i < 8; ++i) n8 *= N;
            return BigRational(4096) * n8 * (N - 27);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- N = X/Y + Y/Z + Z/X ----
    {
        FamilyDef f;
        f.id = "bgb1";
        f.param_names = {"N"};
        f.equation = "X/Y + Y/Z + Z/X = N";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") == 3) throw SingularParams("singular when N = 3");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(N * N, BigRational(8) * N, BigRational(16));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: Z/Y = -H/4 needs H != 0"};
            const BigRational ZY = -pt.x / 4;
            std::vector<Candidate> out;
            for (const BigRational& g : {BigRational(pt.y), BigRational(-pt.y)}) {
                const BigRational XY = (N * pt.x + 4 + g) / (BigRational(2) * pt.x);
                if (sign_of(XY) == 0 || sign_of(ZY) == 0) continue;
                Candidate c;
                c.tuple = cyclic_triple({XY, BigRational(1), ZY}, "X", "Y", "Z");
                c.filter_status = "triple";
                out.push_back(std::move(c));
            }
            std::sort(out.begin(), out.end(),
                      [](const Candidate& a, const Candidate& b) { return a.tuple < b.tuple; });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const Candidate& a, const Candidate& b) {
                                      return a.tuple == b.tuple;
                                  }),
                      out.end());
            if (out.empty()) return Rejection{"all sign choices vanish"};
            return out;
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational X = t.at("X"), Y = t.at("Y"), Z = t.at("Z");
            if (sign_of(X * Y * Z) == 0) return false;
            return X * X * Z + Y * Y * X + Z * Z * Y == N * X * Y * Z;
        };
        f.parametric = [](Params& p, const BigRational& k) {
            if (k == -1) throw std::invalid_argument("k = -1 gives a zero coordinate");
            const BigRational N = -(k + 1) * (k + 1);
            if (p.count("N") && p.at("N") != N)
                throw std::invalid_argument("k fixes N = -(k+1)^2");
            p["N"] = N;
            return cyclic_triple({BigRational(1), k + 1, -(k + 1) * (k + 1)}, "X", "Y", "Z");
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
            return BigRational(4096) * (N - 3) * (N * N + BigRational(3) * N + 9);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- N = (a^3 + b^3 + c^3)/(a b c) ----
    {
        FamilyDef f;
        f.id = "bgb2";
        f.param_names = {"N"};
        f.equation = "a^3 + b^3 + c^3 = N * a*b*c";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") == 3) throw SingularParams("singular when N = 3");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            const BigRational q = N * N + BigRational(3) * N + 9;
            // G^2 = H^3 + ((N+6) H + 4 q)^2
            return CurveQ((N + 6) * (N + 6), BigRational(8) * (N + 6) * q,
                          BigRational(16) * q * q);
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: the map needs H != 0"};
            const BigRational q = N * N + BigRational(3) * N + 9;
            const BigRational den = BigRational(2) * pt.x * (N - 3);
            const BigRational A = (pt.y + N * pt.x + BigRational(4) * q) / den;
            const BigRational B = (-pt.y + N * pt.x + BigRational(4) * q) / den;
            const BigRational C = BigRational(1) - A - B;
            if (sign_of(A) == 0 || sign_of(B) == 0 || sign_of(C) == 0)
                return Rejection{"torsion-trivial: a coordinate vanishes"};
            Candidate c;
            c.tuple = symmetric_triple({A, B, C}, "a", "b", "c");
            c.filter_status = "triple";
            return std::vector<Candidate>{c};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            if (sign_of(a * b * c) == 0) return false;
            return a * a * a + b * b * b + c * c * c == N * a * b * c;
        };
        f.meta.expected_torsion = "Z/3";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            const BigRational q = N * N + BigRational(3) * N + 9, s = N - 3;
            return BigRational(4096) * s * s * s * q * q * q;
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- N = (a+b+c)^3 / (a^3+b^3+c^3) ----
    {
        FamilyDef f;
        f.id = "cube_ratio";
        f.param_names = {"N"};
        f.equation = "(a+b+c)^3 = N (a^3 + b^3 + c^3)";
        f.validate = [](const Params& p) {
            const BigInt N = param_int(p, "N");
            if (N == 0 || N == 1 || N == 9) throw SingularParams("singular when N = 0, 1, 9");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            const BigRational K = BigRational(6) * N * (N - 1);
            // v^2 = u^3 + 36 N^2 (u + K)^2
            return CurveQ(BigRational(36) * N * N, BigRational(72) * N * N * K,
                          BigRational(36) * N * N * K * K);
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: the map needs u != 0"};
            const BigRational den = BigRational(6) * N * pt.x;
            const BigRational w = (BigRational(36) * N * N * (BigRational(1) - N) + pt.y) / den;
            const BigRational z = (BigRational(36) * N * N * (BigRational(1) - N) - pt.y) / den;
            const BigRational c = BigRational(1) - w - z;
            if (sign_of(w) == 0 || sign_of(z) == 0 || sign_of(c) == 0)
                return Rejection{"degenerate: a coordinate vanishes"};
            Candidate cand;
            cand.tuple = symmetric_triple({w, z, c}, "a", "b", "c");
            cand.filter_status = "triple";
            return std::vector<Candidate>{cand};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            const BigRational cubes = a * a * a + b * b * b + c * c * c;
            if (sign_of(cubes) == 0) return false;
            const BigRational s = a + b + c;
            return s * s * s == N * cubes;
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
            BigRational n8(1);
            for (int i = 0; i < 8; ++i) n8 *= N;
            const BigRational om = BigRational(1) - N;
            return BigRational(4096) * BigRational(19683) * n8 * om * om * om * (N - 9);
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- N = (a^3+b^3+c^3) / ((a+b+c)(a^2+b^2+c^2)) ----
    {
        FamilyDef f;
        f.id = "c321";
        f.param_names = {"N"};
        f.equation = "a^3 + b^3 + c^3 = N (a+b+c)(a^2+b^2+c^2)";
        f.validate = [](const Params& p) {
            const Params& pp = p;
            param_int(pp, "N");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            const BigRational K = BigRational(8) * N * N * N - BigRational(24) * N * N +
                                  BigRational(27) * N - 9;
            // v^2 = u^3 + 4 (3(N-1) u + 2K)^2
            const BigRational A = BigRational(3) * (N - 1);
            return CurveQ(BigRational(4) * A * A, BigRational(16) * A * K,
                          BigRational(16) * K * K);
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity || sign_of(pt.x) == 0)
                return Rejection{"torsion-trivial: the map needs u != 0"};
            const BigRational K = BigRational(8) * N * N * N - BigRational(24) * N * N +
                                  BigRational(27) * N - 9;
            const BigRational den = BigRational(6) * pt.x;
            const BigRational a = (pt.y + BigRational(2) * N * pt.x + BigRational(4) * K) / den;
            const BigRational b = (-pt.y + BigRational(2) * N * pt.x + BigRational(4) * K) / den;
            const BigRational c = BigRational(1) - a - b;
            if (sign_of(a) == 0 || sign_of(b) == 0 || sign_of(c) == 0)
                return Rejection{"degenerate: a coordinate vanishes"};
            Candidate cand;
            cand.tuple = symmetric_triple({a, b, c}, "a", "b", "c");
            cand.filter_status = "triple";
            return std::vector<Candidate>{cand};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            const BigRational s = a + b + c, sq = a * a + b * b + c * c;
            if (sign_of(s) == 0 || sign_of(sq) == 0) return false;
            return a * a * a + b * b * b + c * c * c == N * s * sq;
        };
        f.meta.expected_torsion = "Z/3";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            const BigRational K = BigRational(8) * N * N * N - BigRational(24) * N * N +
                                  BigRational(27) * N - 9;
            return BigRational(4096) * BigRational(27) * (BigRational(1) - BigRational(3) * N) *
                   K * K * K;
        };
        reg.emplace(f.id, std::move(f));
    }

    // ---- N = a/(b+c) + b/(c+a) + c/(a+b) ----
    {
        FamilyDef f;
        f.id = "fr3";
        f.param_names = {"N"};
        f.equation = "a/(b+c) + b/(c+a) + c/(a+b) = N";
        f.validate = [](const Params& p) {
            if (param_int(p, "N") == -3) throw SingularParams("degenerate: N = -3");
        };
        f.curve = [](const Params& p) {
            const BigRational N = param(p, "N");
            return CurveQ(BigRational(4) * N * N + BigRational(12) * N - 3,
                          BigRational(32) * (N + 3), BigRational(0));
        };
        f.candidates = [](const Params& p, const PointQ& pt) -> CandidateOutcome {
            const BigRational N = param(p, "N");
            if (pt.infinity) return Rejection{"infinity gives no finite triple"};
            const BigRational den = BigRational(2) * (N + 3) * (pt.x - 4);
            if (sign_of(den) == 0) return Rejection{"pole at u = 4 (order-3 torsion)"};
            const BigRational a = (pt.x + pt.y - BigRational(8) * (N + 3)) / den;
            const BigRational b = (pt.x - pt.y - BigRational(8) * (N + 3)) / den;
            const BigRational c = BigRational(1) - a - b;
            // pairwise sums must stay nonzero for the original equation
            if (sign_of(b + c) == 0 || sign_of(c + a) == 0 || sign_of(a + b) == 0)
                return Rejection{"degenerate: a pairwise sum vanishes"};
            Candidate cand;
            cand.tuple = symmetric_triple({a, b, c}, "a", "b", "c");
            cand.filter_status = "triple";
            return std::vector<Candidate>{cand};
        };
        f.verify = [](const Params& p, const Tuple& t) {
            const BigRational N = param(p, "N");
            const BigRational a = t.at("a"), b = t.at("b"), c = t.at("c");
            if (sign_of(b + c) == 0 || sign_of(c + a) == 0 || sign_of(a + b) == 0) return false;
            return a * (c + a) * (a + b) + b * (b + c) * (a + b) + c * (b + c) * (c + a) ==
                   N * (b + c) * (c + a) * (a + b);
        };
        f.meta.expected_torsion = "Z/6";
        f.meta.closed_discriminant = [](const Params& p) -> BigRational {
            const BigRational N = param(p, "N");
            const BigRational t = BigRational(2) * N + 5;
            return BigRational(16384) * (N + 3) * (N + 3) * (BigRational(2) * N - 3) * t * t * t;
        };
        reg.emplace(f.id, std::move(f));
    }
}

}  // namespace ellsolve::detail
