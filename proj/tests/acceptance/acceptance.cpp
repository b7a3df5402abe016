// Acceptance runner: one PASS/FAIL line per criterion. A criterion passes when
// every suite it maps to reports zero failures at small scale and the summed
// wall time stays inside the budget.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qoperad/error.hpp"
#include "qoperad/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char *title;
    std::vector<const char *> suites;
    double budget_seconds;
};

const std::vector<Criterion> &criteria() {
    static const std::vector<Criterion> list{
        {1, "classical operad laws", {"prob-operad-laws"}, 1.0},
        {2, "Q_P axioms", {"qp-associativity"}, 5.0},
        {3, "insertion equivalence", {"qp-insertion"}, 2.0},
        {4, "Q_Lambda associativity and non-symmetry", {"qlambda-associativity", "qlambda-nonsymmetry"}, 5.0},
        {5, "majorization and entropy", {"majorization"}, 5.0},
        {6, "channel collapse", {"measurement-collapse"}, 5.0},
        {7, "tree entropies", {"quantum-tree-entropy"}, 2.0},
        {8, "Kraus trees", {"kraus-normalization", "channel-differential", "trees-differential"}, 10.0},
        {9, "thermodynamic algebra", {"thermo-shannon", "thermo-oracle", "thermo-limits"}, 10.0},
        {10, "little squares", {"squares-closure", "squares-insertion"}, 5.0},
        {11, "algebra actions", {"symplectic-action"}, 5.0},
        {12, "loops and designs", {"loops-predicates", "loops-designs", "central-ext-loops"}, 5.0},
        {13, "codes", {"codes-commutation", "codes-witness", "codes-partial-action", "codes-decomposition"}, 10.0},
    };
    return list;
}

constexpr std::uint64_t kSeed = 42;

bool run(const Criterion &c, bool verbose) {
    using namespace qoperad::verify;
    double seconds = 0.0;
    std::size_t cases = 0, failures = 0;
    std::string first;
    for (const char *name : c.suites) {
        SuiteReport r;
        try {
            r = run_suite(name, kSeed, Scale::Small);
        } catch (const qoperad::Error &e) {
            std::printf("FAIL [%2d] %s: suite %s raised %s\n", c.id, c.title, name, e.what());
            return false;
        }
        seconds += r.wall_seconds;
        cases += r.cases;
        failures += r.failures.size();
        if (first.empty() && !r.failures.empty()) {
            const auto &f = r.failures.front();
            first = std::string(name) + " case " + std::to_string(f.case_index) + " '" + f.check + "': observed " +
                    f.observed + ", expected " + f.expected;
        }
        if (verbose)
            std::printf("       %-24s %6zu cases %5zu failures %8.3f s\n", name, r.cases, r.failures.size(),
                        r.wall_seconds);
    }
    const bool in_time = seconds <= c.budget_seconds;
    const bool ok = failures == 0 && in_time;
    std::printf("%s [%2d] %s: %zu cases, %zu failures, %.3f s (budget %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                cases, failures, seconds, c.budget_seconds);
    if (!first.empty()) std::printf("       first failure: %.300s\n", first.c_str());
    if (!in_time) std::printf("       over time budget\n");
    return ok;
}

}  // namespace

int main(int argc, char **argv) {
    int only = 0;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--verbose") == 0) {
            verbose = true;
        } else {
            std::fprintf(stderr, "usage: qoperad_acceptance [--criterion N] [--verbose]\n");
            return 2;
        }
    }
    bool all = true;
    bool found = false;
    for (const auto &c : criteria()) {
        if (only != 0 && c.id != only) continue;
        found = true;
        all = run(c, verbose) && all;
    }
    if (!found) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    return all ? 0 : 1;
}
