#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qoperad {

/// Coarse classification surfaced by the CLI as a stable string code.
enum class ErrorCode {
    ArityMismatch,
    IndexOutOfRange,
    InvalidInput,
    DimensionMismatch,
    InvariantViolation,
    NotConverged,
    NotStrict,
    PrimeMismatch,
    Unsupported,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &what);

inline void require(bool ok, ErrorCode code, const std::string &what) {
    if (!ok) fail(code, what);
}

}  // namespace qoperad
