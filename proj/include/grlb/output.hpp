#pragma once

// Serialized form of a single R(X) computation. JSON layout (schema_version 1):
//
//   {
//     "schema_version": 1,
//     "family": "X3",
//     "params": {"k": 4, "n": 7},
//     "dim": 38,
//     "two_rho_P": [{"index": 3, "numerator": "4", "denominator": "1"}, ...],
//     "interval": ["-4/1", "8/1"],
//     "barycenter_t": "-152/429",
//     "R": "429/448",
//     "R_decimal": "0.9576",
//     "provenance": "engine"
//   }
//
// Fractions are strings "p/q" in lowest terms with q > 0, always including
// the denominator. See docs/output-schema.md.

#include <json.hpp>

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "grlb/closed_forms.hpp"
#include "grlb/engine.hpp"
#include "grlb/error.hpp"
#include "grlb/rational.hpp"

namespace grlb::output {

inline constexpr int schema_version = 1;

struct WeightTerm {
    int index = 0;
    Rational coefficient;

    friend bool operator==(const WeightTerm&, const WeightTerm&) = default;
};

struct OutputRecord {
    std::string family;
    std::map<std::string, int> params;
    int dim = 0;
    std::vector<WeightTerm> two_rho_P;
    Rational interval_lower;
    Rational interval_upper;
    Rational barycenter_t;
    Rational R;
    std::string R_decimal;
    std::string provenance;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline std::map<std::string, int> datum_params(const HorosphericalDatum& datum) {
    std::map<std::string, int> params;
    if (datum.n()) {
        params["n"] = *datum.n();
    }
    if (datum.k()) {
        params["k"] = *datum.k();
    }
    return params;
}

inline std::vector<WeightTerm> weight_terms(const WeightExpr& w) {
    std::vector<WeightTerm> out;
    for (const auto& [m, c] : w.terms()) {
        out.push_back({m, c});
    }
    return out;
}

inline OutputRecord make_record(const ComputationReport& report, std::size_t digits) {
    return {std::string(to_string(report.datum.family())),
            datum_params(report.datum),
            report.dimension,
            weight_terms(report.segment.two_rho_P),
            report.segment.lower(),
            report.segment.upper(),
            report.barycenter_t,
            report.R,
            to_decimal(report.R, digits),
            "engine"};
}

/// R from the family's closed formula instead of the engine; the segment and
/// dimension are still read off the root data. Only X1 and X3 have one.
inline OutputRecord make_closed_form_record(const HorosphericalDatum& datum, std::size_t digits) {
    const MomentSegment seg = moment_segment(datum);
    Rational R;
    Rational t_bar;
    switch (datum.family()) {
    case Family::X1:
        R = closed_forms::r_x1_formula(*datum.n());
        t_bar = seg.a * (1 / R - 1);
        break;
    case Family::X3:
        R = *datum.n() == *datum.k() ? closed_forms::r_x3nn_closed(*datum.n())
                                     : closed_forms::r_x3_formula(*datum.n(), *datum.k());
        t_bar = seg.b * (1 - 1 / R);
        break;
    default:
        throw Error(ErrorCode::invalid_parameter,
                    std::string(to_string(datum.family())) + " has no parametrized closed form; use the engine");
    }
    return {std::string(to_string(datum.family())),
            datum_params(datum),
            dimension(datum),
            weight_terms(seg.two_rho_P),
            seg.lower(),
            seg.upper(),
            t_bar,
            R,
            to_decimal(R, digits),
            "closed-form"};
}

inline nlohmann::ordered_json to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = schema_version;
    j["family"] = r.family;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) {
        j["params"][name] = value;
    }
    j["dim"] = r.dim;
    j["two_rho_P"] = nlohmann::ordered_json::array();
    for (const auto& term : r.two_rho_P) {
        nlohmann::ordered_json t;
        t["index"] = term.index;
        t["numerator"] = term.coefficient.get_num().get_str();
        t["denominator"] = term.coefficient.get_den().get_str();
        j["two_rho_P"].push_back(std::move(t));
    }
    j["interval"] = {to_fraction_string(r.interval_lower), to_fraction_string(r.interval_upper)};
    j["barycenter_t"] = to_fraction_string(r.barycenter_t);
    j["R"] = to_fraction_string(r.R);
    j["R_decimal"] = r.R_decimal;
    j["provenance"] = r.provenance;
    return j;
}

namespace detail {

inline Error format_error(const std::string& what) { return Error(ErrorCode::invalid_format, what); }

/// Parses "p/q" and insists on the canonical spelling.
inline Rational canonical_fraction(const nlohmann::json& value, const std::string& field) {
    if (!value.is_string()) {
        throw format_error(field + " must be a \"p/q\" string");
    }
    const auto text = value.get<std::string>();
    const Rational r = parse_rational(text);
    if (to_fraction_string(r) != text) {
        throw format_error(field + " is not a reduced \"p/q\" fraction: " + text);
    }
    return r;
}

} // namespace detail

inline OutputRecord record_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema_version").get<int>() != schema_version) {
            throw detail::format_error("unsupported schema_version");
        }
        OutputRecord r;
        r.family = j.at("family").get<std::string>();
        for (const auto& [name, value] : j.at("params").items()) {
            r.params[name] = value.get<int>();
        }
        r.dim = j.at("dim").get<int>();
        for (const auto& term : j.at("two_rho_P")) {
            const Rational c = parse_rational(term.at("numerator").get<std::string>() + "/" +
                                              term.at("denominator").get<std::string>());
            if (c.get_num().get_str() != term.at("numerator").get<std::string>() ||
                c.get_den().get_str() != term.at("denominator").get<std::string>()) {
                throw detail::format_error("two_rho_P coefficient is not reduced");
            }
            r.two_rho_P.push_back({term.at("index").get<int>(), c});
        }
        const auto& interval = j.at("interval");
        if (!interval.is_array() || interval.size() != 2) {
            throw detail::format_error("interval must be a pair");
        }
        r.interval_lower = detail::canonical_fraction(interval[0], "interval[0]");
        r.interval_upper = detail::canonical_fraction(interval[1], "interval[1]");
        r.barycenter_t = detail::canonical_fraction(j.at("barycenter_t"), "barycenter_t");
        r.R = detail::canonical_fraction(j.at("R"), "R");
        r.R_decimal = j.at("R_decimal").get<std::string>();
        r.provenance = j.at("provenance").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw detail::format_error(std::string("malformed output record: ") + e.what());
    }
}

inline std::string to_json_text(const OutputRecord& r) { return to_json(r).dump(2); }

inline std::string csv_header() { return "family,n,k,dim,R_decimal,provenance"; }

inline std::string to_csv_row(const OutputRecord& r) {
    const auto param = [&](const char* name) {
        const auto it = r.params.find(name);
        return it == r.params.end() ? std::string() : std::to_string(it->second);
    };
    return r.family + "," + param("n") + "," + param("k") + "," + std::to_string(r.dim) + "," + r.R_decimal +
           "," + r.provenance;
}

inline std::string to_text(const OutputRecord& r) {
    std::ostringstream out;
    std::string label = r.family;
    if (r.params.count("n") && r.params.count("k")) {
        label += "(" + std::to_string(r.params.at("n")) + "," + std::to_string(r.params.at("k")) + ")";
    } else if (r.params.count("n")) {
        label += "(" + std::to_string(r.params.at("n")) + ")";
    }
    WeightExpr two_rho;
    for (const auto& term : r.two_rho_P) {
        two_rho.add(term.index, term.coefficient);
    }
    const Rational alpha_bound = r.R * r.dim / (r.dim + 1);
    out << label << "\n"
        << "  dimension      " << r.dim << "\n"
        << "  2rho_P         " << two_rho.to_string() << "\n"
        << "  segment        " << r.interval_lower.get_str() << " <= t <= " << r.interval_upper.get_str() << "\n"
        << "  barycenter t   " << r.barycenter_t.get_str() << "\n"
        << "  R              " << r.R.get_str() << " ≈ " << r.R_decimal << "\n"
        << "  alpha <=       " << to_decimal(alpha_bound, r.R_decimal.size() > 2 ? r.R_decimal.size() - 2 : 4)
        << "  (R dim/(dim+1), informational)\n"
        << "  provenance     " << r.provenance << "\n";
    return out.str();
}

} // namespace grlb::output
