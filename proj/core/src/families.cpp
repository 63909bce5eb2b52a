#include "ellsolve/families.hpp"

#include "ellsolve/torsion.hpp"

#include <algorithm>
#include <sstream>

namespace ellsolve {

const BigRational& Tuple::at(const std::string& name) const {
    for (const auto& [n, v] : entries)
        if (n == name) return v;
    throw std::out_of_range("tuple has no entry '" + name + "'");
}

std::vector<BigRational> Tuple::values() const {
    std::vector<BigRational> out;
    out.reserve(entries.size());
    for (const auto& [n, v] : entries) out.push_back(v);
    return out;
}

std::string Tuple::str() const {
    std::string out;
    for (const auto& [n, v] : entries) {
        if (!out.empty()) out += ", ";
        out += n + "=" + rat_str(v);
    }
    return out;
}

bool Tuple::operator<(const Tuple& o) const {
    if (entries.size() != o.entries.size()) return entries.size() < o.entries.size();
    auto height = [](const Tuple& t) {
        BigInt h = 0;
        for (const auto& [n, v] : t.entries) {
            BigInt c = abs(v.get_num());
            if (c > h) h = c;
            if (v.get_den() > h) h = v.get_den();
        }
        return h;
    };
    const BigInt ha = height(*this), hb = height(o);
    if (ha != hb) return ha < hb;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second != o.entries[i].second)
            return entries[i].second < o.entries[i].second;
    }
    return false;
}

std::string params_str(const Params& p) {
    std::string out;
    for (const auto& [n, v] : p) {
        if (!out.empty()) out += ", ";
        out += n + "=" + rat_str(v);
    }
    return out;
}

namespace detail {

const BigRational& param(const Params& p, const std::string& name) {
    const auto it = p.find(name);
    if (it == p.end()) throw std::invalid_argument("missing parameter '" + name + "'");
    return it->second;
}

BigInt param_int(const Params& p, const std::string& name) {
    const BigRational& v = param(p, name);
    if (v.get_den() != 1)
        throw std::invalid_argument("parameter '" + name + "' must be an integer, got " +
                                    rat_str(v));
    return v.get_num();
}

std::vector<BigRational> primitive(const std::vector<BigRational>& v, int positive_index) {
    BigInt den_lcm = 1;
    for (const auto& q : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    BigInt num_gcd = 0;
    for (const auto& q : v) {
        BigInt scaled = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    std::vector<BigRational> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = BigRational(v[i].get_num() * (den_lcm / v[i].get_den()) / num_gcd);
    int sign_idx = positive_index;
    if (sign_idx < 0) {
        for (size_t i = 0; i < out.size(); ++i)
            if (sign_of(out[i]) != 0) {
                sign_idx = static_cast<int>(i);
                break;
            }
    }
    if (sign_idx >= 0 && sign_idx < static_cast<int>(out.size()) && sign_of(out[sign_idx]) < 0)
        for (auto& q : out) q = -q;
    return out;
}

bool triangle_inequalities(const BigRational& a, const BigRational& b, const BigRational& c) {
    return sign_of(a) > 0 && sign_of(b) > 0 && sign_of(c) > 0 && a + b > c && b + c > a &&
           c + a > b;
}

BigRational heron_16_area_sq(const BigRational& a, const BigRational& b, const BigRational& c) {
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

std::vector<BigRational> quadratic_roots(const BigRational& A, const BigRational& B,
                                         const BigRational& C) {
    if (sign_of(A) == 0) {
        if (sign_of(B) == 0) return {};
        return {BigRational(-C / B)};
    }
    const auto d = rational_square_root(B * B - BigRational(4) * A * C);
    if (!d) return {};
    std::vector<BigRational> out{BigRational((-B + *d) / (BigRational(2) * A))};
    if (sign_of(*d) != 0) out.push_back(BigRational((-B - *d) / (BigRational(2) * A)));
    return out;
}

}  // namespace detail

const std::map<std::string, FamilyDef>& registry() {
    static const std::map<std::string, FamilyDef> reg = [] {
        std::map<std::string, FamilyDef> r;
        detail::register_triangle_families(r);
        detail::register_quadric_families(r);
        detail::register_cubic_families(r);
        detail::register_power_families(r);
        detail::register_geometry_families(r);
        return r;
    }();
    return reg;
}

const FamilyDef& family(const std::string& id) {
    const auto& reg = registry();
    const auto it = reg.find(id);
    if (it == reg.end()) throw UnknownFamily("unknown family '" + id + "'");
    return it->second;
}

CurveQ build_curve(const std::string& id, const Params& p) {
    const FamilyDef& def = family(id);
    if (def.validate) def.validate(p);
    if (!def.curve) throw std::invalid_argument("family '" + id + "' has no curve model");
    return def.curve(p);
}

SolutionOutcome to_solution(const std::string& id, const Params& p, const PointQ& point,
                            size_t sign_choice) {
    const FamilyDef& def = family(id);
    if (def.validate) def.validate(p);
    if (!def.candidates)
        throw std::invalid_argument("family '" + id + "' has no point-to-solution map");
    auto out = def.candidates(p, point);
    if (std::holds_alternative<Rejection>(out)) return std::get<Rejection>(out);
    const auto& cands = std::get<std::vector<Candidate>>(out);
    if (cands.empty()) return Rejection{"filter rejected every sign/root choice"};
    if (sign_choice >= cands.size())
        return Rejection{"sign choice " + std::to_string(sign_choice) + " out of range (" +
                         std::to_string(cands.size()) + " candidates)"};
    SolutionRecord rec;
    rec.family = id;
    rec.params = p;
    rec.point = point;
    rec.tuple = cands[sign_choice].tuple;
    rec.filter_status = cands[sign_choice].filter_status;
    rec.provenance = "manual";
    rec.verified = def.verify && def.verify(p, rec.tuple);
    return rec;
}

bool verify(const std::string& id, const Params& p, const Tuple& tuple) {
    const FamilyDef& def = family(id);
    if (!def.verify) throw std::invalid_argument("family '" + id + "' has no verifier");
    return def.verify(p, tuple);
}

SolutionRecord parametric(const std::string& id, Params p, const BigRational& k) {
    const FamilyDef& def = family(id);
    if (!def.parametric)
        throw std::invalid_argument("family '" + id + "' has no parametric solution");
    SolutionRecord rec;
    rec.tuple = def.parametric(p, k);
    rec.family = id;
    rec.params = p;
    rec.parametric_index = k;
    rec.provenance = "parametric";
    rec.verified = def.verify && def.verify(p, rec.tuple);
    if (!rec.verified)
        throw std::logic_error("parametric solution failed verification for " + id +
                               " at k=" + rat_str(k) + ": " + rec.tuple.str());
    return rec;
}

std::vector<PointQ> enumerate_points(const CurveQ& e, const std::vector<PointQ>& generators,
                                     const std::vector<PointQ>& torsion, long limit) {
    std::vector<PointQ> torsion_full = torsion;
    if (torsion_full.empty()) torsion_full.push_back(PointQ::inf());
    std::vector<PointQ> combos{PointQ::inf()};
    for (const auto& g : generators) {
        std::vector<PointQ> next;
        for (const auto& base : combos) {
            PointQ acc = add(e, base, multiply(e, BigInt(-limit), g));
            for (long k = -limit; k <= limit; ++k) {
                next.push_back(acc);
                if (k < limit) acc = add(e, acc, g);
            }
        }
        combos = std::move(next);
    }
    std::vector<PointQ> out;
    for (const auto& base : combos)
        for (const auto& t : torsion_full) out.push_back(add(e, base, t));
    std::sort(out.begin(), out.end(), [](const PointQ& a, const PointQ& b) {
        if (a.infinity != b.infinity) return a.infinity;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ellsolve
