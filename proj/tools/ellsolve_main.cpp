#include "ellsolve/cache.hpp"
#include "ellsolve/families.hpp"
#include "ellsolve/quartic.hpp"
#include "ellsolve/search.hpp"
#include "ellsolve/special.hpp"
#include "ellsolve/torsion.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace ellsolve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitUsage = 2;

// tuple entry order per family, for --solution parsing and table output
const std::map<std::string, std::vector<std::string>>& tuple_names() {
    static const std::map<std::string, std::vector<std::string>> names = {
        {"eq_sum_product", {"x", "y", "z"}},
        {"congruent", {"a", "b", "h"}},
        {"theta_congruent", {"a", "b", "c"}},
        {"t_congruent", {"a", "b", "c"}},
        {"base_alt_ba", {"a", "b", "c"}},
        {"base_alt_ab", {"a", "b", "c"}},
        {"leech", {"b", "a", "c", "d"}},
        {"circum_in", {"a", "b", "c"}},
        {"median_bisector_mt", {"a", "b", "c"}},
        {"median_alt_mh", {"a", "b", "c"}},
        {"bisector_alt_th", {"a", "b", "c"}},
        {"concordant", {"x", "y", "z", "w"}},
        {"lucas_gerono", {"x", "y", "z", "w"}},
        {"two_quadrics", {"x", "y", "z", "w"}},
        {"dd100", {"x", "y", "z", "w"}},
        {"dd110", {"x", "y", "z", "w"}},
        {"dd10", {"x", "y", "z", "w"}},
        {"dd50", {"x", "y", "z", "w"}},
        {"dd3", {"x", "y", "z", "w"}},
        {"dd120", {"x", "y", "z", "w"}},
        {"dd20", {"x", "y", "z", "w"}},
        {"dd60", {"x", "y", "z", "w"}},
        {"dd40", {"x", "y", "z", "w"}},
        {"leech_variant", {"x", "y", "z", "w"}},
        {"piezas", {"a", "b", "c", "d"}},
        {"two_cubes", {"a", "b"}},
        {"knight", {"X", "Y", "Z"}},
        {"bga", {"X", "Y", "Z"}},
        {"bgb1", {"X", "Y", "Z"}},
        {"bgb2", {"a", "b", "c"}},
        {"cube_ratio", {"a", "b", "c"}},
        {"c321", {"a", "b", "c"}},
        {"fr3", {"a", "b", "c"}},
        {"sum_cubes_equal", {"A", "B", "C", "D"}},
        {"euler_quartic", {"A", "B", "C", "D"}},
        {"multigrade4", {"A", "B", "C", "D", "E"}},
        {"simple_quartic", {"x", "y", "z"}},
        {"prod_diff", {"x", "y", "z", "w"}},
        {"prod_mixed", {"x", "y", "z", "w"}},
        {"prod_sum", {"x", "y", "z", "w"}},
        {"cuboid_body", {"L", "B", "H"}},
        {"cuboid_face", {"L", "B", "H"}},
        {"cuboid_side", {"L", "B", "H"}},
        {"tiling_delta", {"X", "Y"}},
        {"tiling_nu", {"X", "Y"}},
        {"tiling_kappa", {"X", "Y"}},
        {"tiling_chi", {"a", "b", "c", "d"}},
        {"magic_square", {"a", "b", "c"}},
    };
    return names;
}

struct ParamFlags {
    std::map<std::string, std::string> raw;

    void attach(CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");  // frees -h for the parameter h
        for (const char* name : {"N", "M", "m", "n", "r", "s", "e", "f", "g", "h", "C", "D",
                                 "c", "b", "k"})
            cmd->add_option(std::string("--") + name, raw[name]);
    }
    Params collect(const FamilyDef& def) const {
        Params p;
        for (const auto& name : def.param_names) {
            const auto it = raw.find(name);
            if (it == raw.end() || it->second.empty())
                throw std::invalid_argument("family '" + def.id + "' needs --" + name);
            p[name] = parse_rational(it->second);
        }
        return p;
    }
};

std::vector<BigRational> parse_rational_list(const std::string& text) {
    std::vector<BigRational> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

nlohmann::json record_as_json(const SolutionRecord& r) {
    nlohmann::json jr;
    nlohmann::json tup = nlohmann::json::object();
    for (const auto& [k, v] : r.tuple.entries) tup[k] = rat_str(v);
    jr["tuple"] = tup;
    if (r.point && !r.point->infinity)
        jr["point"] = {rat_str(r.point->x), rat_str(r.point->y)};
    else
        jr["point"] = nullptr;
    jr["provenance"] = r.provenance;
    jr["verified"] = r.verified;
    jr["filter_status"] = r.filter_status;
    return jr;
}

std::string tuple_text(const Tuple& t) {
    std::string out;
    for (const auto& [k, v] : t.entries) {
        if (!out.empty()) out += ", ";
        out += k + "=" + rat_str(v);
    }
    return out;
}

int cmd_solve(const std::string& fam, const ParamFlags& pf, long bound, long pbound,
              bool isogenies, bool no_descent, long enumerate_l, int workers,
              const std::string& format, const std::string& cache_path, bool progress) {
    const FamilyDef& def = family(fam);
    Params p = pf.collect(def);
    SolveOptions opts;
    opts.budget = SearchBudget(bound, pbound > 0 ? pbound : bound, workers);
    opts.budget.enumerate_limit = enumerate_l;
    opts.use_isogenies = isogenies;
    opts.use_descent = !no_descent;
    if (progress)
        opts.hook = [](const std::string& phase, unsigned long n) {
            std::cerr << "[" << phase << "] tested " << n << " candidates\n";
        };
    SolveResult res = solve(fam, p, opts);

    if (!cache_path.empty())
        for (const auto& r : res.solutions) cache_append(cache_path, r);

    if (format == "json") {
        nlohmann::json j;
        j["family"] = fam;
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [k, v] : p) params[k] = rat_str(v);
        j["params"] = params;
        j["solutions"] = nlohmann::json::array();
        for (const auto& r : res.solutions) j["solutions"].push_back(record_as_json(r));
        if (!res.near_misses.empty()) {
            j["near_misses"] = nlohmann::json::array();
            for (const auto& r : res.near_misses) j["near_misses"].push_back(record_as_json(r));
        }
        j["status"] = res.status;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << fam << " (" << params_str(p) << "): " << res.status << "\n";
        for (const auto& r : res.solutions) {
            std::cout << "  " << tuple_text(r.tuple) << "   [" << r.provenance;
            if (!r.filter_status.empty()) std::cout << "; " << r.filter_status;
            std::cout << "]\n";
        }
        for (const auto& r : res.near_misses)
            std::cout << "  near miss: " << tuple_text(r.tuple) << "\n";
    }
    return res.solutions.empty() && res.near_misses.empty() ? kExitNoSolution : kExitOk;
}

int cmd_curve(const std::string& fam, const ParamFlags& pf) {
    const FamilyDef& def = family(fam);
    Params p = pf.collect(def);
    const CurveQ e = build_curve(fam, p);
    std::cout << e.str() << "\n";
    std::cout << "discriminant: " << rat_str(discriminant(e)) << "\n";
    const auto tor = torsion_subgroup(e);
    std::cout << "torsion: " << tor.structure << " {";
    bool first = true;
    for (const auto& t : tor.points) {
        if (!first) std::cout << ", ";
        std::cout << t.str();
        first = false;
    }
    std::cout << "}\n";
    std::cout << "real components: " << real_components(e) << "\n";
    return kExitOk;
}

int cmd_reduce(const std::string& quartic_csv, const std::string& point_csv) {
    auto c = parse_rational_list(quartic_csv);
    if (c.size() != 5) throw std::invalid_argument("--quartic needs five coefficients a,b,c,d,e");
    std::optional<std::pair<BigRational, BigRational>> pt;
    if (!point_csv.empty()) {
        auto pv = parse_rational_list(point_csv);
        if (pv.size() != 2) throw std::invalid_argument("--point needs x,y");
        pt = std::make_pair(pv[0], pv[1]);
    }
    QuarticModel q(c[0], c[1], c[2], c[3], c[4], pt);
    QuarticReduction red = pt ? reduce_with_point(q, *pt) : reduce_quartic(q);
    std::cout << q.str() << "\n";
    std::cout << "curve: " << red.curve.str() << (red.singular ? "   (singular)" : "") << "\n";
    std::cout << "built-in point: " << red.builtin_point.str() << "\n";
    std::cout << "forward u = (" << red.map.fwd_u.num.str("x", "y") << ") / ("
              << red.map.fwd_u.den.str("x", "y") << ")\n";
    std::cout << "forward v = (" << red.map.fwd_v.num.str("x", "y") << ") / ("
              << red.map.fwd_v.den.str("x", "y") << ")\n";
    std::cout << "reverse x = (" << red.map.rev_x.num.str("u", "v") << ") / ("
              << red.map.rev_x.den.str("u", "v") << ")\n";
    std::cout << "reverse y = (" << red.map.rev_y.num.str("u", "v") << ") / ("
              << red.map.rev_y.den.str("u", "v") << ")\n";
    return kExitOk;
}

int cmd_search(const std::string& curve_csv, long bound, bool descent, int workers) {
    auto c = parse_rational_list(curve_csv);
    if (c.size() != 3) throw std::invalid_argument("--curve needs a2,a4,a6");
    const CurveQ e(c[0], c[1], c[2]);
    SearchBudget budget(bound, bound, workers);
    auto pts = descent ? descent_search(e, budget) : naive_search(e, budget);
    std::cout << e.str() << "\n";
    for (const auto& p : pts) std::cout << "  " << p.str() << "\n";
    std::cout << pts.size() << " points (bound " << bound << (descent ? ", descent" : "")
              << ")\n";
    return kExitOk;
}

int cmd_isogeny(const std::string& curve_csv, int degree) {
    auto c = parse_rational_list(curve_csv);
    if (c.size() != 3) throw std::invalid_argument("--curve needs a2,a4,a6");
    const CurveQ e(c[0], c[1], c[2]);
    IsogenyMap m = degree == 2 ? isogeny2(e) : degree == 3 ? isogeny3(e) : isogeny4(e);
    std::cout << "source: " << e.str() << "\n";
    std::cout << "target: " << m.target().str() << "\n";
    std::cout << "degree: " << m.degree() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& fam, const ParamFlags& pf, const std::string& solution_csv) {
    const FamilyDef& def = family(fam);
    Params p = pf.collect(def);
    auto values = parse_rational_list(solution_csv);
    const auto it = tuple_names().find(fam);
    if (it == tuple_names().end()) throw std::invalid_argument("no tuple layout for " + fam);
    if (values.size() < it->second.size())
        throw std::invalid_argument("--solution needs " + std::to_string(it->second.size()) +
                                    " values: " + def.equation);
    Tuple t;
    for (size_t i = 0; i < it->second.size(); ++i) t.entries.emplace_back(it->second[i], values[i]);
    const bool ok = verify(fam, p, t);
    std::cout << "family: " << fam << "\nsolution: " << tuple_text(t) << "\nverified: "
              << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitNoSolution;
}

int cmd_table(const std::string& fam, long n1, long n2, long bound, bool isogenies,
              int workers) {
    const FamilyDef& def = family(fam);
    if (def.param_names != std::vector<std::string>{"N"} &&
        def.param_names != std::vector<std::string>{"M"} &&
        def.param_names != std::vector<std::string>{"b"} &&
        def.param_names != std::vector<std::string>{"c"})
        throw std::invalid_argument("table needs a single-parameter family");
    const std::string pname = def.param_names[0];
    const auto it = tuple_names().find(fam);
    std::cout << pname;
    if (it != tuple_names().end())
        for (const auto& n : it->second) std::cout << "\t" << n;
    std::cout << "\n";
    int exit_code = kExitNoSolution;
    for (long n = n1; n <= n2; ++n) {
        Params p{{pname, BigRational(n)}};
        try {
            SolveOptions opts;
            opts.budget = SearchBudget(bound, bound, workers);
            opts.use_isogenies = isogenies;
            auto res = solve(fam, p, opts);
            if (res.solutions.empty()) continue;
            exit_code = kExitOk;
            std::cout << n;
            for (const auto& [k, v] : res.solutions[0].tuple.entries)
                std::cout << "\t" << rat_str(v);
            std::cout << "\n";
        } catch (const SingularParams&) {
            continue;
        }
    }
    return exit_code;
}

int cmd_families() {
    for (const auto& [id, def] : registry()) {
        std::cout << id << " (";
        bool first = true;
        for (const auto& n : def.param_names) {
            if (!first) std::cout << ", ";
            std::cout << n;
            first = false;
        }
        std::cout << "): " << def.equation << "\n";
    }
    return kExitOk;
}

int cmd_cache_query(const std::string& path, const std::string& fam) {
    auto res = cache_query(path, fam.empty() ? CacheFilter{} : CacheFilter{[&](const SolutionRecord& r) {
                               return r.family == fam;
                           }});
    for (const auto& r : res.records)
        std::cout << r.family << " (" << params_str(r.params) << "): " << tuple_text(r.tuple)
                  << "\n";
    if (res.skipped_corrupt || res.skipped_unverified)
        std::cerr << "skipped " << res.skipped_corrupt << " corrupt and "
                  << res.skipped_unverified << " unverifiable lines\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-rational elliptic-curve toolkit for Diophantine problems"};
    app.require_subcommand(1);

    std::string fam, format = "json", cache_path, quartic_csv, point_csv, curve_csv,
                solution_csv, range_spec, cache_file;
    long bound = 200, pbound = 0, enumerate_l = 1;
    int workers = 1, degree = 2;
    bool isogenies = false, no_descent = false, do_descent = false, progress = false;

    ParamFlags pf;

    auto* c_solve = app.add_subcommand("solve", "search a family instance and map points back");
    c_solve->add_option("family", fam)->required();
    pf.attach(c_solve);
    c_solve->add_option("--bound", bound, "u,v bound for the point search");
    c_solve->add_option("--param-bound", pbound, "descent parameter bound (defaults to --bound)");
    c_solve->add_flag("--isogenies", isogenies, "also search isogenous curves and pull back");
    c_solve->add_flag("--no-descent", no_descent);
    c_solve->add_option("--enumerate", enumerate_l, "generator combination limit L");
    c_solve->add_option("--workers", workers);
    c_solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    c_solve->add_option("--cache", cache_path, "append verified solutions to this JSON-lines file");
    c_solve->add_flag("--progress", progress);

    auto* c_curve = app.add_subcommand("curve", "print model, discriminant, torsion, components");
    c_curve->add_option("family", fam)->required();
    pf.attach(c_curve);

    auto* c_reduce = app.add_subcommand("reduce", "birationally reduce a quartic y^2 = q(x)");
    c_reduce->add_option("--quartic", quartic_csv, "a,b,c,d,e")->required();
    c_reduce->add_option("--point", point_csv, "x,y on the quartic");

    auto* c_search = app.add_subcommand("search", "rational point search on a curve");
    c_search->add_option("--curve", curve_csv, "a2,a4,a6")->required();
    c_search->add_option("--bound", bound);
    c_search->add_flag("--descent", do_descent);
    c_search->add_option("--workers", workers);

    auto* c_iso = app.add_subcommand("isogeny", "construct the 2-, 3- or 4-isogeny");
    c_iso->add_option("--curve", curve_csv, "a2,a4,a6")->required();
    c_iso->add_option("--degree", degree)->check(CLI::IsMember({2, 3, 4}));

    auto* c_verify = app.add_subcommand("verify", "check a solution against the original equations");
    c_verify->add_option("family", fam)->required();
    pf.attach(c_verify);
    c_verify->add_option("--solution", solution_csv)->required();

    auto* c_table = app.add_subcommand("table", "solve across a parameter range");
    c_table->add_option("family", fam)->required();
    c_table->add_option("--range", range_spec, "N1..N2")->required();
    c_table->add_option("--bound", bound);
    c_table->add_flag("--isogenies", isogenies);
    c_table->add_option("--workers", workers);

    auto* c_fam = app.add_subcommand("families", "list the registry");

    auto* c_cache = app.add_subcommand("cache", "query a JSON-lines cache file");
    c_cache->add_option("--path", cache_file)->required();
    c_cache->add_option("--family", fam);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_solve->parsed())
            return cmd_solve(fam, pf, bound, pbound, isogenies, no_descent, enumerate_l, workers,
                             format, cache_path, progress);
        if (c_curve->parsed()) return cmd_curve(fam, pf);
        if (c_reduce->parsed()) return cmd_reduce(quartic_csv, point_csv);
        if (c_search->parsed()) return cmd_search(curve_csv, bound, do_descent, workers);
        if (c_iso->parsed()) return cmd_isogeny(curve_csv, degree);
        if (c_verify->parsed()) return cmd_verify(fam, pf, solution_csv);
        if (c_table->parsed()) {
            const auto dots = range_spec.find("..");
            if (dots == std::string::npos)
                throw std::invalid_argument("--range needs the form N1..N2");
            const long n1 = std::stol(range_spec.substr(0, dots));
            const long n2 = std::stol(range_spec.substr(dots + 2));
            return cmd_table(fam, n1, n2, bound, isogenies, workers);
        }
        if (c_fam->parsed()) return cmd_families();
        if (c_cache->parsed()) return cmd_cache_query(cache_file, fam);
    } catch (const UnknownFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SingularParams& e) {
        std::cerr << "error: singular parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
