#include <doctest.h>

#include <set>

#include "qoperad/error.hpp"
#include "qoperad/verify.hpp"

using namespace qoperad;

TEST_CASE("suite ids are unique") {
    std::set<std::string> names;
    for (const auto &s : verify::all_suites()) CHECK(names.insert(s.name).second);
    CHECK(names.size() >= 13);
}

TEST_CASE("reports are deterministic") {
    const auto a = verify::run_suite("qp-associativity", 42, verify::Scale::Small);
    const auto b = verify::run_suite("qp-associativity", 42, verify::Scale::Small);
    CHECK(a.passed());
    CHECK(a.cases == b.cases);
    CHECK(a.notes == b.notes);
    const auto m = verify::run_suite("majorization", 7, verify::Scale::Small);
    CHECK(m.passed());
    CHECK(m.cases == 1000);
}

TEST_CASE("unknown suites and scales") {
    CHECK_THROWS_AS(verify::run_suite("no-such-suite", 1, verify::Scale::Small), Error);
    CHECK_THROWS_AS(verify::parse_scale("huge"), Error);
    CHECK(verify::parse_scale("full") == verify::Scale::Full);
}
