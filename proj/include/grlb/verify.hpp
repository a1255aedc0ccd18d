#pragma once

// Verification suites behind `grlb verify`.

#include <json.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grlb/closed_forms.hpp"
#include "grlb/engine.hpp"
#include "grlb/error.hpp"
#include "grlb/quadrature.hpp"

namespace grlb::verify {

enum class Suite { lemmas, closed_forms, oracle, bounds };

inline std::optional<Suite> parse_suite(std::string_view text) {
    if (text == "lemmas") return Suite::lemmas;
    if (text == "closed-forms") return Suite::closed_forms;
    if (text == "oracle") return Suite::oracle;
    if (text == "bounds") return Suite::bounds;
    return std::nullopt;
}

constexpr std::string_view to_string(Suite suite) noexcept {
    switch (suite) {
    case Suite::lemmas: return "lemmas";
    case Suite::closed_forms: return "closed-forms";
    case Suite::oracle: return "oracle";
    case Suite::bounds: return "bounds";
    }
    return "?";
}

/// Smallest max_n for which the suite has anything to check.
constexpr int minimum_max_n(Suite suite) noexcept { return suite == Suite::lemmas ? 3 : 2; }

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    Suite suite = Suite::lemmas;
    int max_n = 0;
    std::vector<CheckOutcome> checks;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    std::size_t failures() const {
        std::size_t count = 0;
        for (const auto& c : checks) {
            count += c.passed ? 0 : 1;
        }
        return count;
    }
};

namespace detail {

inline std::string params_label(const closed_forms::BoundCheck& check) {
    std::string out;
    for (const auto& [name, value] : check.params) {
        out += (out.empty() ? "" : ",") + name + "=" + std::to_string(value);
    }
    return out;
}

inline CheckOutcome from_bound(const closed_forms::BoundCheck& check) {
    std::string detail = std::string(closed_forms::to_string(check.relation)) + ": lhs " +
                         to_decimal(check.lhs, 12) + ", rhs " + to_decimal(check.rhs, 12);
    if (!check.margin.empty()) {
        detail += ", margin " + check.margin;
    }
    return {check.name + "(" + params_label(check) + ")", check.holds, detail};
}

inline CheckOutcome equality(std::string name, const Rational& lhs, const Rational& rhs) {
    return {std::move(name), lhs == rhs, lhs == rhs ? "equal" : lhs.get_str() + " != " + rhs.get_str()};
}

inline std::string label(const char* family, int n, int k = 0) {
    return std::string(family) + "(" + std::to_string(n) + (k ? "," + std::to_string(k) : "") + ")";
}

inline void run_lemmas(VerifyReport& report) {
    const int max_n = report.max_n;
    for (int n = 3; n <= max_n; ++n) {
        report.checks.push_back(from_bound(closed_forms::lemma_x1_sign(n)));
        report.checks.push_back(from_bound(closed_forms::lemma_x1_zero_identity(n)));
    }
    for (int n = 3; n <= max_n; ++n) {
        for (int k = 2; k < n; ++k) {
            report.checks.push_back(from_bound(closed_forms::lemma_x3nk_sign(n, k)));
        }
    }
    Rational previous = closed_forms::a_sequence(0);
    for (int n = 0; n <= max_n; ++n) {
        const Rational a_n = closed_forms::a_sequence(n);
        report.checks.push_back(
            equality("a-sequence-integral(n=" + std::to_string(n) + ")", a_n,
                     closed_forms::a_sequence_by_integration(n)));
        report.checks.push_back(equality("a-sequence-recurrence(n=" + std::to_string(n) + ")",
                                         closed_forms::a_sequence(n + 1),
                                         closed_forms::a_sequence_step(n, a_n)));
        if (n >= 2) {
            report.checks.push_back(from_bound(closed_forms::lemma_x3n(n)));
        }
        if (n >= 2) {
            report.checks.push_back({"a-sequence-increasing(n=" + std::to_string(n) + ")", a_n > previous,
                                     to_decimal(previous, 12) + " < " + to_decimal(a_n, 12)});
        }
        previous = a_n;
    }
}

inline void run_closed_forms(VerifyReport& report) {
    const int max_n = report.max_n;
    for (int n = 3; n <= max_n; ++n) {
        report.checks.push_back(equality("engine=formula " + label("X1", n),
                                         greatest_ricci_lower_bound(HorosphericalDatum::x1(n)),
                                         closed_forms::r_x1_formula(n)));
    }
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 2; k <= n; ++k) {
            report.checks.push_back(equality("engine=formula " + label("X3", n, k),
                                             greatest_ricci_lower_bound(HorosphericalDatum::x3(n, k)),
                                             closed_forms::r_x3_formula(n, k)));
        }
        report.checks.push_back(equality("formula=factorial " + label("X3", n, n), closed_forms::r_x3_formula(n, n),
                                         closed_forms::r_x3nn_closed(n)));
        report.checks.push_back(equality("factorial=2/a_n " + label("X3", n, n), closed_forms::r_x3nn_closed(n),
                                         2 / closed_forms::a_sequence(n)));
    }
}

inline void run_oracle(VerifyReport& report) {
    constexpr double tolerance = 1e-9;
    std::vector<HorosphericalDatum> data{HorosphericalDatum::x2(), HorosphericalDatum::x4(),
                                         HorosphericalDatum::x5()};
    for (int n = 3; n <= report.max_n; ++n) {
        data.push_back(HorosphericalDatum::x1(n));
    }
    for (int n = 2; n <= report.max_n; ++n) {
        for (int k = 2; k <= n; ++k) {
            data.push_back(HorosphericalDatum::x3(n, k));
        }
    }
    for (const auto& d : data) {
        const auto c = oracle::crosscheck(d, tolerance);
        char detail[160];
        std::snprintf(detail, sizeof detail, "rel. error t_bar %.3e, R %.3e (tolerance %.0e)%s",
                      c.barycenter_t_rel_error, c.R_rel_error, tolerance, c.log_domain ? ", log-domain" : "");
        report.checks.push_back({"quadrature " + c.datum, c.agrees, detail});
    }
}

inline void run_bounds(VerifyReport& report) {
    for (int n = 3; n <= report.max_n; ++n) {
        report.checks.push_back(from_bound(closed_forms::asymptotic_bounds(Family::X1, n)));
    }
    for (int n = 2; n <= report.max_n; ++n) {
        for (int k = 2; k <= n; ++k) {
            report.checks.push_back(from_bound(closed_forms::asymptotic_bounds(Family::X3, n, k)));
        }
    }
}

} // namespace detail

inline VerifyReport run_verify(Suite suite, int max_n) {
    if (max_n < minimum_max_n(suite)) {
        throw Error(ErrorCode::invalid_parameter, "--max-n must be at least " + std::to_string(minimum_max_n(suite)) +
                                                      " for suite " + std::string(to_string(suite)));
    }
    if (suite == Suite::oracle && max_n > oracle::crosscheck_max_n) {
        throw Error(ErrorCode::invalid_parameter,
                    "oracle suite is limited to --max-n <= " + std::to_string(oracle::crosscheck_max_n));
    }
    VerifyReport report{suite, max_n, {}};
    switch (suite) {
    case Suite::lemmas: detail::run_lemmas(report); break;
    case Suite::closed_forms: detail::run_closed_forms(report); break;
    case Suite::oracle: detail::run_oracle(report); break;
    case Suite::bounds: detail::run_bounds(report); break;
    }
    return report;
}

inline nlohmann::ordered_json to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = std::string(to_string(report.suite));
    j["max_n"] = report.max_n;
    j["passed"] = report.passed();
    j["failures"] = report.failures();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return j;
}

inline std::string to_text(const VerifyReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        out += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name + "  " + c.detail + "\n";
    }
    out += std::string(to_string(report.suite)) + ": " + std::to_string(report.checks.size() - report.failures()) +
           "/" + std::to_string(report.checks.size()) + " checks passed\n";
    return out;
}

} // namespace grlb::verify
