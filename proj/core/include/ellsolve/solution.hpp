#pragma once

#include "ellsolve/curve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ellsolve {

using Params = std::map<std::string, BigRational>;

// Named solution values, in presentation order.
struct Tuple {
    std::vector<std::pair<std::string, BigRational>> entries;

    Tuple() = default;
    Tuple(std::initializer_list<std::pair<std::string, BigRational>> e) : entries(e) {}
    const BigRational& at(const std::string& name) const;
    std::vector<BigRational> values() const;
    std::string str() const;
    bool operator==(const Tuple&) const = default;
    bool operator<(const Tuple& o) const;
};

struct SolutionRecord {
    std::string family;
    Params params;
    std::optional<PointQ> point;
    std::optional<BigRational> parametric_index;
    Tuple tuple;
    bool verified = false;
    std::string filter_status;  // e.g. "triangle", "arithmetic-only", "near-miss ..."
    std::string provenance;     // search | isogeny-pullback | parametric | manual | torsion
};

std::string params_str(const Params& p);

}  // namespace ellsolve
