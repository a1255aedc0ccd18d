#pragma once

// The three published tables, regenerated from the engine.

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <future>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "grlb/engine.hpp"
#include "grlb/error.hpp"
#include "grlb/rational.hpp"

namespace grlb::tables {

enum class Format { text, json, csv };

inline std::optional<Format> parse_format(std::string_view text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    return std::nullopt;
}

inline constexpr std::array<int, 10> table2_grid{3, 4, 5, 6, 7, 10, 20, 30, 50, 70};

/// Digits after the point in the published layout of Table 2, per row and
/// grid column. 0 marks a cell that does not exist.
inline constexpr std::array<std::array<std::size_t, 10>, 4> table2_published_digits{{
    {4, 4, 4, 4, 4, 4, 4, 4, 4, 4},
    {3, 3, 2, 3, 3, 4, 4, 4, 4, 5},
    {3, 4, 4, 3, 3, 4, 4, 4, 4, 5},
    {0, 3, 3, 3, 3, 4, 4, 4, 4, 5},
}};

/// Published precision of the single-value tables.
inline constexpr std::size_t table1_published_digits = 3;
inline constexpr std::size_t table3_published_digits = 3;

struct Table1Row {
    std::string family;
    std::string dimension;
    std::string R_expression;
    std::optional<Rational> R;
};

struct Table2Row {
    std::string label;
    /// 0 for X1(n), otherwise the fixed k of X3(n, k).
    int k = 0;
    /// One cell per grid value; empty where the datum does not exist (k > n).
    std::vector<std::optional<Rational>> cells;
};

struct Table2 {
    std::vector<int> grid;
    std::vector<Table2Row> rows;
};

struct Table3Row {
    int n = 0;
    Rational R;
};

inline std::vector<Table1Row> compute_table1() {
    const auto exact = [](const HorosphericalDatum& d) {
        return Table1Row{d.label(), std::to_string(dimension(d)), {}, greatest_ricci_lower_bound(d)};
    };
    return {
        {"X1(n)", "n(n+3)/2",
         "n ∫(2-t)(n+t)^(n-1)(t+2n+2)^(n(n-1)/2) dt / ∫(2-t)(n+t)^n(t+2n+2)^(n(n-1)/2) dt over [-n, 2]",
         std::nullopt},
        exact(HorosphericalDatum::x2()),
        {"X3(n,n)", "n(n+3)/2", "2 (2n+1)! / ((n+2) (2^n n!)^2)", std::nullopt},
        {"X3(n,k)", "k(4n-3k+3)/2",
         "(2n-2k+2) ∫(k+t)^(k-1)(2n-2k+2-t)^(2n-2k+1)(4n-3k+4-t)^(k-1) dt / "
         "∫(k+t)^(k-1)(2n-2k+2-t)^(2n-2k+2)(4n-3k+4-t)^(k-1) dt over [-k, 2n-2k+2]",
         std::nullopt},
        exact(HorosphericalDatum::x4()),
        exact(HorosphericalDatum::x5()),
    };
}

/// Rows X1(n), X3(n,2), X3(n,3), X3(n,4) over the grid. Cells are computed
/// concurrently.
inline Table2 compute_table2(std::span<const int> grid = table2_grid) {
    Table2 table{{grid.begin(), grid.end()}, {}};
    for (int k : {0, 2, 3, 4}) {
        Table2Row row{k == 0 ? "X1(n)" : "X3(n," + std::to_string(k) + ")", k, {}};
        std::vector<std::future<std::optional<Rational>>> pending;
        for (int n : grid) {
            pending.push_back(std::async(std::launch::async, [n, k]() -> std::optional<Rational> {
                if (k == 0) {
                    return n >= 3 ? std::optional(greatest_ricci_lower_bound(HorosphericalDatum::x1(n)))
                                  : std::nullopt;
                }
                return n >= k ? std::optional(greatest_ricci_lower_bound(HorosphericalDatum::x3(n, k)))
                              : std::nullopt;
            }));
        }
        for (auto& f : pending) {
            row.cells.push_back(f.get());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline std::vector<Table3Row> compute_table3(int first = 2, int last = 7) {
    std::vector<Table3Row> rows;
    for (int n = first; n <= last; ++n) {
        rows.push_back({n, greatest_ricci_lower_bound(HorosphericalDatum::x3(n, n))});
    }
    return rows;
}

/// "15/16 = 0.9375" when the decimal terminates within six digits,
/// "3003/4096 ≈ 0.733" otherwise.
inline std::string fraction_with_decimal(const Rational& r, std::size_t digits) {
    if (const auto exact = terminating_digits(r, 6)) {
        return r.get_str() + " = " + to_decimal(r, std::max<std::size_t>(*exact, 1));
    }
    return r.get_str() + " ≈ " + to_decimal(r, digits);
}

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
    // Count code points so that "≈" and "∫" occupy one column.
    std::size_t visible = 0;
    for (unsigned char c : s) {
        visible += (c & 0xC0) != 0x80;
    }
    if (visible < width) {
        s.append(width - visible, ' ');
    }
    return s;
}

} // namespace detail

inline std::string render_table1(Format format, std::optional<std::size_t> requested = std::nullopt) {
    const auto rows = compute_table1();
    // X5 is printed with four digits, the others with three.
    const auto digits_for = [&](const Table1Row& r) {
        return requested.value_or(r.family == "X5" ? 4 : table1_published_digits);
    };
    std::ostringstream out;
    switch (format) {
    case Format::text:
        out << detail::pad("X", 10) << detail::pad("dim X", 16) << "R(X)\n";
        for (const auto& r : rows) {
            out << detail::pad(r.family, 10) << detail::pad(r.dimension, 16)
                << (r.R ? fraction_with_decimal(*r.R, digits_for(r)) : r.R_expression) << "\n";
        }
        break;
    case Format::json: {
        nlohmann::ordered_json j = {{"schema_version", 1}, {"table", 1}, {"rows", nlohmann::ordered_json::array()}};
        for (const auto& r : rows) {
            nlohmann::ordered_json row = {{"family", r.family}, {"dim", r.dimension}};
            if (r.R) {
                row["R"] = to_fraction_string(*r.R);
                row["R_decimal"] = to_decimal(*r.R, digits_for(r));
            } else {
                row["R_expression"] = r.R_expression;
            }
            j["rows"].push_back(std::move(row));
        }
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "family,dim,R_decimal\n";
        for (const auto& r : rows) {
            out << r.family << "," << r.dimension << "," << (r.R ? to_decimal(*r.R, digits_for(r)) : std::string()) << "\n";
        }
        break;
    }
    return out.str();
}

inline std::string render_table2(Format format, std::optional<std::size_t> requested = std::nullopt) {
    const Table2 table = compute_table2();
    const auto cell_text = [&](std::size_t row, std::size_t col) -> std::string {
        const auto& c = table.rows[row].cells[col];
        if (!c) {
            return "-";
        }
        return to_decimal(*c, requested.value_or(table2_published_digits[row][col]));
    };
    const std::size_t width = requested.value_or(5) + 4;
    std::ostringstream out;
    switch (format) {
    case Format::text:
        out << detail::pad("n", 10);
        for (std::size_t c = 0; c < table.grid.size(); ++c) {
            const std::string n = std::to_string(table.grid[c]);
            out << (c + 1 < table.grid.size() ? detail::pad(n, width) : n);
        }
        out << "\n";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            std::string line = detail::pad(table.rows[r].label, 10);
            for (std::size_t c = 0; c < table.grid.size(); ++c) {
                line += c + 1 < table.grid.size() ? detail::pad(cell_text(r, c), width) : cell_text(r, c);
            }
            out << line << "\n";
        }
        break;
    case Format::json: {
        nlohmann::ordered_json j = {{"schema_version", 1}, {"table", 2}, {"n", table.grid}, {"rows", nlohmann::ordered_json::array()}};
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            nlohmann::ordered_json fractions = nlohmann::ordered_json::array();
            nlohmann::ordered_json values = nlohmann::ordered_json::array();
            for (std::size_t c = 0; c < table.grid.size(); ++c) {
                const auto& cell = table.rows[r].cells[c];
                fractions.push_back(cell ? nlohmann::ordered_json(to_fraction_string(*cell)) : nlohmann::ordered_json());
                values.push_back(cell ? nlohmann::ordered_json(cell_text(r, c)) : nlohmann::ordered_json());
            }
            j["rows"].push_back(
                {{"label", table.rows[r].label}, {"R", std::move(fractions)}, {"R_decimal", std::move(values)}});
        }
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "row";
        for (int n : table.grid) {
            out << "," << n;
        }
        out << "\n";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            out << table.rows[r].label;
            for (std::size_t c = 0; c < table.grid.size(); ++c) {
                out << "," << cell_text(r, c);
            }
            out << "\n";
        }
        break;
    }
    return out.str();
}

inline std::string render_table3(Format format, std::optional<std::size_t> requested = std::nullopt) {
    const auto rows = compute_table3();
    const std::size_t digits = requested.value_or(table3_published_digits);
    std::ostringstream out;
    switch (format) {
    case Format::text:
        out << detail::pad("n", 4) << "R(X3(n,n))\n";
        for (const auto& r : rows) {
            out << detail::pad(std::to_string(r.n), 4) << fraction_with_decimal(r.R, digits) << "\n";
        }
        break;
    case Format::json: {
        nlohmann::ordered_json j = {{"schema_version", 1}, {"table", 3}, {"rows", nlohmann::ordered_json::array()}};
        for (const auto& r : rows) {
            j["rows"].push_back(
                {{"n", r.n}, {"R", to_fraction_string(r.R)}, {"R_decimal", to_decimal(r.R, digits)}});
        }
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "n,R_decimal\n";
        for (const auto& r : rows) {
            out << r.n << "," << to_decimal(r.R, digits) << "\n";
        }
        break;
    }
    return out.str();
}

/// Without `digits` each cell keeps its published precision.
inline std::string render_table(int id, Format format, std::optional<std::size_t> digits = std::nullopt) {
    switch (id) {
    case 1: return render_table1(format, digits);
    case 2: return render_table2(format, digits);
    case 3: return render_table3(format, digits);
    default: throw Error(ErrorCode::invalid_parameter, "table id must be 1, 2 or 3");
    }
}

} // namespace grlb::tables
