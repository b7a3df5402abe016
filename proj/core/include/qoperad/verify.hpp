#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qoperad/linalg.hpp"

namespace qoperad::verify {

enum class Scale { Small, Full };

Scale parse_scale(std::string_view name);
std::string_view scale_name(Scale scale);

struct Failure {
    std::size_t case_index = 0;
    std::string check;
    std::string inputs;
    std::string observed;
    std::string expected;
    double tolerance = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    Scale scale = Scale::Small;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    /// Informational lines (e.g. recorded witnesses), deterministic.
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Collects checks for one suite run.
class Recorder {
   public:
    explicit Recorder(SuiteReport &report) : report_(report) {}

    /// Starts case `index`; later checks are attributed to it.
    void begin_case(std::size_t index, std::string inputs = {});
    /// |observed - expected| <= tol.
    bool near(std::string_view check, double observed, double expected, double tol);
    /// Matrices agree entrywise within tol.
    bool near(std::string_view check, const Matrix &observed, const Matrix &expected, double tol);
    bool holds(std::string_view check, bool ok, std::string observed = "false", std::string expected = "true");
    void note(std::string line) { report_.notes.push_back(std::move(line)); }

   private:
    SuiteReport &report_;
    std::size_t current_ = 0;
    std::string inputs_;
};

struct SuiteInfo {
    std::string name;
    std::string module;
    std::string description;
    std::function<void(Recorder &, std::uint64_t seed, Scale scale)> run;
};

const std::vector<SuiteInfo> &all_suites();
const SuiteInfo *find_suite(std::string_view name);

/// Runs the suite and fills timing; throws InvalidInput for unknown names.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, Scale scale);

/// Deterministic text forms used in failure reports.
std::string format_double(double x);
std::string format_matrix(const Matrix &m);

}  // namespace qoperad::verify
