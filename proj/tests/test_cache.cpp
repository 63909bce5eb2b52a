#include "doctest.h"

#include "ellsolve/cache.hpp"
#include "ellsolve/families.hpp"

#include <cstdio>
#include <fstream>

using namespace ellsolve;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const char* name) : path(std::string("/tmp/ellsolve_test_") + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

SolutionRecord sample_record() {
    auto out = to_solution("two_cubes", {{"N", BigRational(6)}},
                           PointQ(BigRational(28), BigRational(80)));
    return std::get<SolutionRecord>(out);
}

}  // namespace

TEST_CASE("cache round trip") {
    TempFile f("roundtrip.jsonl");
    SolutionRecord rec = sample_record();
    REQUIRE(rec.verified);
    cache_append(f.path, rec);
    auto got = cache_query(f.path);
    REQUIRE(got.records.size() == 1);
    CHECK(got.records[0].family == "two_cubes");
    CHECK(got.records[0].tuple == rec.tuple);
    CHECK(got.records[0].verified);
    CHECK(got.skipped_corrupt == 0);
}

TEST_CASE("tampered tuples are excluded with a warning count") {
    TempFile f("tampered.jsonl");
    SolutionRecord rec = sample_record();
    std::string line = record_to_json(rec);
    // corrupt the tuple value 37/21 -> 38/21
    auto pos = line.find("37/21");
    REQUIRE(pos != std::string::npos);
    line.replace(pos, 5, "38/21");
    std::ofstream(f.path) << line << "\n" << "this is not json\n";
    auto got = cache_query(f.path);
    CHECK(got.records.empty());
    CHECK(got.skipped_unverified == 1);
    CHECK(got.skipped_corrupt == 1);
}

TEST_CASE("empty or absent cache reads as empty") {
    TempFile f("empty.jsonl");
    auto got = cache_query(f.path);
    CHECK(got.records.empty());
    std::ofstream(f.path).close();
    got = cache_query(f.path);
    CHECK(got.records.empty());
}

TEST_CASE("filtered query") {
    TempFile f("filter.jsonl");
    cache_append(f.path, sample_record());
    auto got = cache_query(f.path, [](const SolutionRecord& r) { return r.family == "nope"; });
    CHECK(got.records.empty());
    got = cache_query(f.path, [](const SolutionRecord& r) { return r.family == "two_cubes"; });
    CHECK(got.records.size() == 1);
}
