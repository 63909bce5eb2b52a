#include "ellsolve/isogeny.hpp"

#include <algorithm>

namespace ellsolve {

namespace {

BigRational g_of(const CurveQ& e, const BigRational& x) {
    return BigRational(3) * x * x + BigRational(2) * e.a2 * x + e.a4;
}

// target model after U = s^2 (u + shift), V = s^3 v applied to u^3+Au^2+Bu+C
CurveQ transform_curve(const CurveQ& raw, const BigRational& shift, const BigRational& scale) {
    // substitute u = U/s^2 - shift and clear s^6
    const BigRational s2 = scale * scale;
    const BigRational A = raw.a2, B = raw.a4, C = raw.a6;
    // f(U) = s^6 [ (U/s^2 - shift)^3 + A (.)^2 + B (.) + C ]
    const BigRational a2n = (A - BigRational(3) * shift) * s2;
    const BigRational a4n =
        (BigRational(3) * shift * shift - BigRational(2) * A * shift + B) * s2 * s2;
    const BigRational a6n =
        (-shift * shift * shift + A * shift * shift - B * shift + C) * s2 * s2 * s2;
    return CurveQ(a2n, a4n, a6n);
}

IsogenyStage make_stage(const CurveQ& e, const std::vector<PointQ>& halfset) {
    IsogenyStage st;
    st.source = e;
    BigRational t_sum(0), w_sum(0);
    for (const auto& p : halfset) {
        if (p.infinity) throw CurveError("kernel half-set may not contain infinity");
        if (!on_curve(e, p)) throw CurveError("kernel point " + p.str() + " not on curve");
        const auto ord = point_order(e, p);
        if (!ord || *ord == 1) throw CurveError("kernel point " + p.str() + " is not torsion");
        KernelTerm k;
        k.r = p.x;
        k.s = p.y;
        k.order2 = sign_of(p.y) == 0;
        k.t = (k.order2 ? BigRational(1) : BigRational(2)) * g_of(e, k.r);
        k.u = BigRational(4) * k.s * k.s;
        t_sum += k.t;
        w_sum += k.u + k.r * k.t;
        st.kernel.push_back(std::move(k));
    }
    st.degree = 1;
    for (const auto& k : st.kernel) st.degree += k.order2 ? 1 : 2;
    st.raw_target = CurveQ(e.a2, e.a4 - BigRational(5) * t_sum,
                           e.a6 - BigRational(4) * e.a2 * t_sum - BigRational(7) * w_sum);
    st.target = st.raw_target;
    return st;
}

void renormalize(IsogenyStage& st) { st.target = transform_curve(st.raw_target, st.shift, st.scale); }

}  // namespace

MapOutcome<PointQ> IsogenyStage::forward(const PointQ& p) const {
    if (p.infinity) return PointQ::inf();
    if (!on_curve(source, p)) throw CurveError("point " + p.str() + " not on " + source.str());
    BigRational u = p.x, v = p.y;
    for (const auto& k : kernel) {
        if (p.x == k.r) return Rejection{"kernel point " + p.str() + " maps to infinity"};
        const BigRational d = p.x - k.r;
        const BigRational d2 = d * d, d3 = d2 * d;
        u += k.t / d + k.u / d2;
        // v' = y [1 - sum(2u_P/(x-r)^3 + t_P/(x-r)^2)] ; the constant parts
        // cancel because t_P = 2 g(r_P) off order-2 and s_P = 0 on it
        v -= BigRational(2) * k.u * p.y / d3 + k.t * (p.y - k.s) / d2 +
             BigRational(2) * k.s * g_of(source, k.r) / d2;
    }
    const BigRational s2 = scale * scale;
    PointQ out(s2 * (u + shift), s2 * scale * v);
    if (!on_curve(target, out))
        throw CurveError("isogeny image " + out.str() + " missed " + target.str());
    return out;
}

int IsogenyMap::degree() const {
    int d = 1;
    for (const auto& st : stages) d *= st.degree;
    return d;
}

MapOutcome<PointQ> IsogenyMap::forward(const PointQ& p) const {
    PointQ cur = p;
    for (const auto& st : stages) {
        auto out = st.forward(cur);
        if (std::holds_alternative<Rejection>(out)) return out;
        cur = std::get<PointQ>(out);
    }
    return cur;
}

CurveQ velu(const CurveQ& e, const std::vector<PointQ>& kernel_halfset) {
    return make_stage(e, kernel_halfset).raw_target;
}

IsogenyMap velu_map(const CurveQ& e, const std::vector<PointQ>& kernel_halfset) {
    IsogenyMap m;
    m.stages.push_back(make_stage(e, kernel_halfset));
    return m;
}

IsogenyMap isogeny2(const CurveQ& e) {
    if (sign_of(e.a6) != 0 || sign_of(e.a4) == 0)
        throw CurveError("2-isogeny needs the form v^2 = x^3 + a x^2 + b x, b != 0");
    IsogenyMap m = velu_map(e, {PointQ(BigRational(0), BigRational(0))});
    m.stages[0].shift = e.a2;  // (u + a)(u^2 - 4b) -> h^3 - 2a h^2 + (a^2 - 4b) h
    renormalize(m.stages[0]);
    return m;
}

IsogenyMap isogeny3(const CurveQ& e) {
    // parse y^2 = x^3 + (a x + b)^2: a2 = a^2, a4 = 2ab, a6 = b^2
    const auto b0 = rational_square_root(e.a6);
    if (!b0 || sign_of(*b0) == 0)
        throw CurveError("3-isogeny needs the form y^2 = x^3 + (ax + b)^2 with b != 0");
    for (const BigRational& b : {BigRational(*b0), BigRational(-*b0)}) {
        const BigRational a = e.a4 / (BigRational(2) * b);
        if (a * a != e.a2) continue;
        IsogenyMap m = velu_map(e, {PointQ(BigRational(0), b)});
        m.stages[0].shift = BigRational(4) * a * a / 3;
        m.stages[0].scale = BigRational(3);
        renormalize(m.stages[0]);
        return m;
    }
    throw CurveError("curve is not of the form y^2 = x^3 + (ax + b)^2");
}

IsogenyMap isogeny4(const CurveQ& e) {
    // parse y^2 = x^3 + (a^2 + 2b) x^2 + b^2 x
    if (sign_of(e.a6) != 0) throw CurveError("4-isogeny needs a6 = 0");
    const auto b0 = rational_square_root(e.a4);
    if (!b0 || sign_of(*b0) == 0)
        throw CurveError("4-isogeny needs the form y^2 = x^3 + (a^2+2b) x^2 + b^2 x");
    for (const BigRational& b : {BigRational(*b0), BigRational(-*b0)}) {
        const auto a = rational_square_root(e.a2 - BigRational(2) * b);
        if (!a) continue;
        const PointQ four(-b, *a * b);
        if (!on_curve(e, four)) continue;
        if (point_order(e, four) != 4) continue;
        IsogenyMap m = velu_map(e, {PointQ(BigRational(0), BigRational(0)), four});
        m.stages[0].shift = *a * *a - BigRational(2) * b;
        renormalize(m.stages[0]);
        return m;
    }
    throw CurveError("curve has no rational order-4 kernel (0,0), (-b, ab)");
}

IsogenyMap identity_isogeny(const CurveQ& e) { return velu_map(e, {}); }

IsogenyMap compose(const std::vector<IsogenyMap>& maps) {
    if (maps.empty()) throw CurveError("compose of empty chain");
    IsogenyMap out = maps.front();
    for (size_t i = 1; i < maps.size(); ++i) {
        if (!(maps[i].source() == out.target()))
            throw CurveError("mismatched isogeny chain: " + out.target().str() + " vs " +
                             maps[i].source().str());
        for (const auto& st : maps[i].stages) out.stages.push_back(st);
    }
    return out;
}

void shift_target(IsogenyMap& m, const BigRational& delta) {
    IsogenyStage& st = m.stages.back();
    st.shift += delta / (st.scale * st.scale);
    renormalize(st);
}

void scale_target(IsogenyMap& m, const BigRational& mu) {
    IsogenyStage& st = m.stages.back();
    st.scale *= mu;
    renormalize(st);
}

namespace {

// preimages of a single stage: x-solutions of u_fwd(x) = u_raw
std::vector<PointQ> stage_preimages(const IsogenyStage& st, const PointQ& target_pt) {
    std::vector<PointQ> out;
    if (target_pt.infinity) {
        out.push_back(PointQ::inf());
        for (const auto& k : st.kernel) {
            out.push_back(PointQ(k.r, k.s));
            if (!k.order2) out.push_back(PointQ(k.r, -k.s));
        }
        return out;
    }
    // un-normalize
    const BigRational s2 = st.scale * st.scale;
    const BigRational u_raw = target_pt.x / s2 - st.shift;
    const BigRational v_raw = target_pt.y / (s2 * st.scale);

    // numerator of u_fwd(x) - u_raw over prod (x - r)^2
    PolyQ D = PolyQ::constant(BigRational(1));
    for (const auto& k : st.kernel) {
        PolyQ lin({-k.r, BigRational(1)});
        D = D * lin * lin;
    }
    PolyQ N({BigRational(0), BigRational(1)});  // x
    N = N * D;
    for (const auto& k : st.kernel) {
        PolyQ lin({-k.r, BigRational(1)});
        // D / (x-r) and D / (x-r)^2
        PolyQ q1, r1;
        PolyQ::divmod(D, lin, q1, r1);
        PolyQ q2, r2;
        PolyQ::divmod(q1, lin, q2, r2);
        N = N + q1 * k.t + q2 * k.u;
    }
    PolyQ eqn = N - D * u_raw;
    for (const auto& x : rational_roots(eqn)) {
        bool in_kernel = false;
        for (const auto& k : st.kernel)
            if (x == k.r) in_kernel = true;
        if (in_kernel) continue;
        // v = A(x) y with A(x) = 1 - sum(2u_P/(x-r)^3 + t_P/(x-r)^2)
        BigRational A(1);
        for (const auto& k : st.kernel) {
            const BigRational d = x - k.r;
            A -= BigRational(2) * k.u / (d * d * d) + k.t / (d * d);
        }
        std::vector<BigRational> ys;
        if (sign_of(A) != 0) {
            ys.push_back(v_raw / A);
        } else {
            const auto y = rational_square_root(st.source.rhs(x));
            if (y) {
                ys.push_back(*y);
                ys.push_back(-*y);
            }
        }
        for (const auto& y : ys) {
            PointQ cand(x, y);
            if (!on_curve(st.source, cand)) continue;
            auto img = st.forward(cand);
            if (std::holds_alternative<PointQ>(img) && std::get<PointQ>(img) == target_pt)
                out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), [](const PointQ& a, const PointQ& b) {
        if (a.infinity != b.infinity) return a.infinity;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<PointQ> pull_back(const IsogenyMap& m, const PointQ& q) {
    if (!on_curve(m.target(), q))
        throw CurveError("point " + q.str() + " not on " + m.target().str());
    PointQ multiple = multiply(m.target(), BigInt(m.degree()), q);
    std::vector<PointQ> frontier{multiple};
    for (auto it = m.stages.rbegin(); it != m.stages.rend(); ++it) {
        std::vector<PointQ> next;
        for (const auto& pt : frontier)
            for (const auto& pre : stage_preimages(*it, pt)) next.push_back(pre);
        std::sort(next.begin(), next.end(), [](const PointQ& a, const PointQ& b) {
            if (a.infinity != b.infinity) return a.infinity;
            if (a.x != b.x) return a.x < b.x;
            return a.y < b.y;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
    }
    return frontier;
}

}  // namespace ellsolve
