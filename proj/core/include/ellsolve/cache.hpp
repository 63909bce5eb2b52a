#pragma once

#include "ellsolve/solution.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ellsolve {

// JSON-lines solution store: one record per line, append-only.  Reads
// re-verify every record against the family equations; corrupt lines and
// records that fail verification are skipped and counted.
struct CacheReadResult {
    std::vector<SolutionRecord> records;
    unsigned skipped_corrupt = 0;
    unsigned skipped_unverified = 0;
};

void cache_append(const std::string& path, const SolutionRecord& record);

using CacheFilter = std::function<bool(const SolutionRecord&)>;
CacheReadResult cache_query(const std::string& path, const CacheFilter& filter = nullptr);

std::string record_to_json(const SolutionRecord& record);

}  // namespace ellsolve
