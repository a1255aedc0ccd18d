#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grlb {

enum class ErrorCode {
    invalid_interval,
    unsupported_root_system,
    index_out_of_range,
    invalid_datum,
    invalid_parameter,
    degenerate_measure,
    evaluation_failure,
    no_convergence,
    invalid_format,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_interval: return "invalid-interval";
    case ErrorCode::unsupported_root_system: return "unsupported-root-system";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::invalid_datum: return "invalid-datum";
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::degenerate_measure: return "degenerate-measure";
    case ErrorCode::evaluation_failure: return "evaluation-failure";
    case ErrorCode::no_convergence: return "no-convergence";
    case ErrorCode::invalid_format: return "invalid-format";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace grlb
