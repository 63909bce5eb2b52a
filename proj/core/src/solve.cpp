#include "ellsolve/families.hpp"
#include "ellsolve/torsion.hpp"

#include <algorithm>
#include <set>

namespace ellsolve {

namespace {

void add_candidates(const FamilyDef& def, const Params& p, const PointQ& pt,
                    const std::string& provenance, std::vector<SolutionRecord>& sink,
                    std::vector<SolutionRecord>& near_misses) {
    if (!def.candidates) return;
    auto out = def.candidates(p, pt);
    if (std::holds_alternative<Rejection>(out)) return;
    for (const auto& cand : std::get<std::vector<Candidate>>(out)) {
        SolutionRecord rec;
        rec.family = def.id;
        rec.params = p;
        rec.point = pt;
        rec.tuple = cand.tuple;
        rec.filter_status = cand.filter_status;
        rec.provenance = provenance;
        rec.verified = def.verify && def.verify(p, rec.tuple);
        if (rec.verified) {
            // families with a hard validity filter only emit solutions that
            // passed it; everything else is reported as arithmetic-only
            sink.push_back(std::move(rec));
        } else if (cand.filter_status == "near-miss") {
            near_misses.push_back(std::move(rec));
        }
    }
}

}  // namespace

SolveResult solve(const std::string& id, const Params& p, const SolveOptions& opts) {
    const FamilyDef& def = family(id);
    if (def.validate) def.validate(p);
    SolveResult result;

    std::vector<SolutionRecord> found;

    if (def.curve_backed()) {
        const CurveQ e = def.curve(p);
        const TorsionGroup tor = torsion_subgroup(e);

        std::vector<PointQ> points;
        for (const auto& t : tor.points) points.push_back(t);

        auto absorb = [&](const std::vector<PointQ>& pts) {
            for (const auto& q : pts) points.push_back(q);
        };
        absorb(naive_search(e, opts.budget, opts.hook));
        if (opts.use_descent && sign_of(e.a6) == 0 && sign_of(e.a4) != 0)
            absorb(descent_search(e, opts.budget, opts.hook));

        // points transferred back from the registry isogeny variants
        std::vector<std::pair<PointQ, std::string>> tagged;
        for (const auto& pt : points) tagged.emplace_back(pt, "search");
        if (opts.use_isogenies) {
            for (const auto& iso : def.isogenies) {
                IsogenyMap m = iso.build(p);
                std::vector<PointQ> target_pts = naive_search(m.target(), opts.budget, opts.hook);
                if (opts.use_descent && sign_of(m.target().a6) == 0 &&
                    sign_of(m.target().a4) != 0) {
                    for (auto& q : descent_search(m.target(), opts.budget, opts.hook))
                        target_pts.push_back(std::move(q));
                }
                for (const auto& q : target_pts) {
                    if (q.infinity) continue;
                    for (const auto& pre : pull_back(m, q))
                        tagged.emplace_back(pre, "isogeny-pullback");
                }
            }
        }

        // generators: the infinite-order points found, smallest heights first
        std::vector<PointQ> gens;
        for (const auto& [pt, tag] : tagged) {
            if (pt.infinity || point_order(e, pt)) continue;
            bool dup = false;
            for (const auto& g : gens)
                if (g.x == pt.x) dup = true;
            if (!dup) gens.push_back(pt);
        }
        std::sort(gens.begin(), gens.end(), [](const PointQ& a, const PointQ& b) {
            return naive_height(a) < naive_height(b);
        });
        if (gens.size() > 3) gens.resize(3);

        std::set<std::pair<std::string, std::string>> seen;  // (x, y) keys
        auto consider = [&](const PointQ& pt, const std::string& provenance) {
            for (const PointQ& q : {pt, negate(e, pt)}) {
                const auto key = q.infinity ? std::make_pair(std::string("inf"), std::string())
                                            : std::make_pair(rat_str(q.x), rat_str(q.y));
                if (!seen.insert(key).second) continue;
                add_candidates(def, p, q, provenance, found, result.near_misses);
            }
        };
        for (const auto& [pt, tag] : tagged) consider(pt, tag);
        if (opts.budget.enumerate_limit > 0 && !gens.empty())
            for (const auto& pt :
                 enumerate_points(e, gens, tor.points, opts.budget.enumerate_limit))
                consider(pt, "search");
    } else if (def.quartic) {
        const QuarticModel q = def.quartic(p);
        for (const auto& [x, y] : quartic_search(q, opts.budget, opts.hook)) {
            // hand quartic hits to the family as synthetic points (x, y)
            add_candidates(def, p, PointQ(x, y), "search", found, result.near_misses);
        }
    }

    if (def.parametric && found.empty() && !def.curve_backed() && !def.quartic) {
        // closed-form-only families answer directly
        try {
            Params pc = p;
            BigRational k = pc.count("N") ? pc.at("N") : BigRational(0);
            SolutionRecord rec = parametric(id, pc, k);
            found.push_back(std::move(rec));
        } catch (const std::exception&) {
            // fall through with an empty result
        }
    }

    // canonical order, dedupe by tuple
    std::sort(found.begin(), found.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
        if (!(a.tuple == b.tuple)) return a.tuple < b.tuple;
        return a.provenance < b.provenance;
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const SolutionRecord& a, const SolutionRecord& b) {
                                return a.tuple == b.tuple;
                            }),
                found.end());
    std::sort(result.near_misses.begin(), result.near_misses.end(),
              [](const SolutionRecord& a, const SolutionRecord& b) {
                  // smallest gap first when present
                  try {
                      return a.tuple.at("gap") < b.tuple.at("gap");
                  } catch (const std::out_of_range&) {
                      return a.tuple < b.tuple;
                  }
              });
    result.solutions = std::move(found);
    result.status = result.solutions.empty() ? "no point found within budget" : "ok";
    return result;
}

}  // namespace ellsolve
