#include "qoperad/error.hpp"

namespace qoperad {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ArityMismatch:
            return "arity_mismatch";
        case ErrorCode::IndexOutOfRange:
            return "index_out_of_range";
        case ErrorCode::InvalidInput:
            return "invalid_input";
        case ErrorCode::DimensionMismatch:
            return "dimension_mismatch";
        case ErrorCode::InvariantViolation:
            return "invariant_violation";
        case ErrorCode::NotConverged:
            return "not_converged";
        case ErrorCode::NotStrict:
            return "not_strict";
        case ErrorCode::PrimeMismatch:
            return "prime_mismatch";
        case ErrorCode::Unsupported:
            return "unsupported";
    }
    return "unknown";
}

void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

}  // namespace qoperad
