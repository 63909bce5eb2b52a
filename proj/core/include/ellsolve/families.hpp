#pragma once

#include "ellsolve/curve.hpp"
#include "ellsolve/isogeny.hpp"
#include "ellsolve/quartic.hpp"
#include "ellsolve/search.hpp"
#include "ellsolve/solution.hpp"

#include <functional>
#include <map>
#include <variant>

namespace ellsolve {

class SingularParams : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnknownFamily : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Candidate {
    Tuple tuple;
    std::string filter_status;
};

using CandidateOutcome = std::variant<std::vector<Candidate>, Rejection>;

// Descriptive fixtures only; nothing here feeds the algorithms.
struct FamilyMeta {
    std::string expected_torsion;
    std::function<BigRational(const Params&)> closed_discriminant;
    std::string singular_condition;
};

struct NamedIsogeny {
    std::string name;
    std::function<IsogenyMap(const Params&)> build;
};

struct FamilyDef {
    std::string id;
    std::vector<std::string> param_names;
    std::string equation;  // the Diophantine problem this family solves

    std::function<void(const Params&)> validate;  // throws SingularParams / invalid_argument
    std::function<CurveQ(const Params&)> curve;   // null for closed-form / quartic-only families
    std::function<QuarticModel(const Params&)> quartic;  // quartic-search families

    // every sign/root choice for one curve point, already canonicalized
    std::function<CandidateOutcome(const Params&, const PointQ&)> candidates;
    // exact substitution into the original equations; the universal oracle
    std::function<bool(const Params&, const Tuple&)> verify;
    // closed-form solutions; may fix family parameters from k
    std::function<Tuple(Params&, const BigRational& k)> parametric;

    std::vector<NamedIsogeny> isogenies;
    FamilyMeta meta;

    bool curve_backed() const { return static_cast<bool>(curve); }
};

const std::map<std::string, FamilyDef>& registry();
const FamilyDef& family(const std::string& id);

// ---- operations over the registry ----

CurveQ build_curve(const std::string& id, const Params& p);

// sign_choice indexes the candidate list produced by the forward map chain
using SolutionOutcome = std::variant<SolutionRecord, Rejection>;
SolutionOutcome to_solution(const std::string& id, const Params& p, const PointQ& point,
                            size_t sign_choice = 0);

bool verify(const std::string& id, const Params& p, const Tuple& tuple);

SolutionRecord parametric(const std::string& id, Params p, const BigRational& k);

// all combinations k1 P1 + ... + kr Pr + T with |ki| <= limit
std::vector<PointQ> enumerate_points(const CurveQ& e, const std::vector<PointQ>& generators,
                                     const std::vector<PointQ>& torsion, long limit);

struct SolveOptions {
    SearchBudget budget;
    bool use_descent = true;
    bool use_isogenies = false;
    ProgressHook hook;
};

struct SolveResult {
    std::vector<SolutionRecord> solutions;
    std::string status;  // "ok" or "no point found within budget"
    std::vector<SolutionRecord> near_misses;  // families with no exact target (labeled non-solutions)
};

SolveResult solve(const std::string& id, const Params& p, const SolveOptions& opts);

// ---- helpers shared by the family implementations ----
namespace detail {

const BigRational& param(const Params& p, const std::string& name);
BigInt param_int(const Params& p, const std::string& name);

// scale a homogeneous tuple to primitive integers; sign fixed by `positive`:
// the entry at that index is made positive (-1: first nonzero entry)
std::vector<BigRational> primitive(const std::vector<BigRational>& v, int positive_index = -1);

bool triangle_inequalities(const BigRational& a, const BigRational& b, const BigRational& c);
BigRational heron_16_area_sq(const BigRational& a, const BigRational& b, const BigRational& c);

// roots of A t^2 + B t + C; empty when the discriminant is not a rational square
std::vector<BigRational> quadratic_roots(const BigRational& A, const BigRational& B,
                                         const BigRational& C);

void register_triangle_families(std::map<std::string, FamilyDef>& reg);
void register_quadric_families(std::map<std::string, FamilyDef>& reg);
void register_cubic_families(std::map<std::string, FamilyDef>& reg);
void register_power_families(std::map<std::string, FamilyDef>& reg);
void register_geometry_families(std::map<std::string, FamilyDef>& reg);

}  // namespace detail

}  // namespace ellsolve
