#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "qoperad/error.hpp"
#include "qoperad/verify.hpp"
#include "suites.hpp"

namespace qoperad::verify {

Scale parse_scale(std::string_view name) {
    if (name == "small") return Scale::Small;
    if (name == "full") return Scale::Full;
    fail(ErrorCode::InvalidInput, "unknown scale '" + std::string(name) + "' (expected small or full)");
}

std::string_view scale_name(Scale scale) { return scale == Scale::Small ? "small" : "full"; }

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_matrix(const Matrix &m) {
    std::string out = "[";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out += r ? ",[" : "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ",";
            const Complex z = m(r, c);
            out += format_double(z.real());
            if (z.imag() != 0.0) out += (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i";
        }
        out += "]";
    }
    return out + "]";
}

void Recorder::begin_case(std::size_t index, std::string inputs) {
    current_ = index;
    inputs_ = std::move(inputs);
    report_.cases = std::max(report_.cases, index + 1);
}

bool Recorder::near(std::string_view check, double observed, double expected, double tol) {
    const bool ok = std::isfinite(observed) && std::abs(observed - expected) <= tol;
    if (!ok)
        report_.failures.push_back(
            {current_, std::string(check), inputs_, format_double(observed), format_double(expected), tol});
    return ok;
}

bool Recorder::near(std::string_view check, const Matrix &observed, const Matrix &expected, double tol) {
    const bool shape = observed.rows() == expected.rows() && observed.cols() == expected.cols();
    const bool ok = shape && (observed.size() == 0 || (observed - expected).cwiseAbs().maxCoeff() <= tol);
    if (!ok)
        report_.failures.push_back(
            {current_, std::string(check), inputs_, format_matrix(observed), format_matrix(expected), tol});
    return ok;
}

bool Recorder::holds(std::string_view check, bool ok, std::string observed, std::string expected) {
    if (!ok) report_.failures.push_back({current_, std::string(check), inputs_, std::move(observed), std::move(expected), 0.0});
    return ok;
}

const std::vector<SuiteInfo> &all_suites() {
    static const std::vector<SuiteInfo> suites = [] {
        std::vector<SuiteInfo> s;
        register_tree_suites(s);
        register_prob_suites(s);
        register_density_suites(s);
        register_qstate_suites(s);
        register_measurement_suites(s);
        register_channel_suites(s);
        register_loop_suites(s);
        register_square_suites(s);
        register_symplectic_suites(s);
        register_code_suites(s);
        return s;
    }();
    return suites;
}

const SuiteInfo *find_suite(std::string_view name) {
    for (const auto &s : all_suites())
        if (s.name == name) return &s;
    return nullptr;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, Scale scale) {
    const SuiteInfo *info = find_suite(name);
    require(info != nullptr, ErrorCode::InvalidInput, "unknown suite '" + std::string(name) + "'");
    SuiteReport report;
    report.suite = info->name;
    report.seed = seed;
    report.scale = scale;
    Recorder rec(report);
    const auto start = std::chrono::steady_clock::now();
    try {
        info->run(rec, seed, scale);
    } catch (const Error &e) {
        rec.holds("unexpected error", false, std::string(error_code_name(e.code())) + ": " + e.what(), "no error");
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const Failure &a, const Failure &b) { return a.case_index < b.case_index; });
    return report;
}

}  // namespace qoperad::verify
