#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "grlb/grlb.hpp"

namespace {

constexpr int exit_invalid = 2;
constexpr int exit_verification = 3;
constexpr int default_max_n = 100;

int exact_ceiling() {
    if (const char* env = std::getenv("GRLB_MAX_N")) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(env, &used);
            if (used == std::string(env).size() && value > 0) {
                return value;
            }
        } catch (const std::exception&) {
        }
        throw grlb::Error(grlb::ErrorCode::invalid_parameter,
                          "GRLB_MAX_N must be a positive integer (got \"" + std::string(env) + "\")");
    }
    return default_max_n;
}

struct ComputeOptions {
    std::string family;
    std::optional<int> n;
    std::optional<int> k;
    std::size_t digits = 4;
    std::string format = "text";
    std::string method = "engine";
};

int run_compute(const ComputeOptions& opt) {
    const auto family = grlb::parse_family(opt.family);
    if (!family) {
        throw grlb::Error(grlb::ErrorCode::invalid_parameter,
                          "--family must be one of X1, X2, X3, X4, X5 (got \"" + opt.family + "\")");
    }
    const auto datum = grlb::HorosphericalDatum::make(*family, opt.n, opt.k);
    if (const int ceiling = exact_ceiling(); datum.n() && *datum.n() > ceiling) {
        throw grlb::Error(grlb::ErrorCode::invalid_parameter,
                          "n = " + std::to_string(*datum.n()) + " exceeds the exact-computation ceiling " +
                              std::to_string(ceiling) + " (raise it with GRLB_MAX_N)");
    }
    const auto record = opt.method == "engine" ? grlb::output::make_record(grlb::report(datum), opt.digits)
                                               : grlb::output::make_closed_form_record(datum, opt.digits);
    if (opt.format == "json") {
        std::cout << grlb::output::to_json_text(record) << "\n";
    } else if (opt.format == "csv") {
        std::cout << grlb::output::csv_header() << "\n" << grlb::output::to_csv_row(record) << "\n";
    } else {
        std::cout << grlb::output::to_text(record);
    }
    return 0;
}

int run_verify(const std::string& suite_name, int max_n, bool json) {
    const auto suite = grlb::verify::parse_suite(suite_name);
    if (!suite) {
        throw grlb::Error(grlb::ErrorCode::invalid_parameter,
                          "--suite must be one of lemmas, closed-forms, oracle, bounds (got \"" + suite_name + "\")");
    }
    if (max_n > exact_ceiling()) {
        throw grlb::Error(grlb::ErrorCode::invalid_parameter,
                          "--max-n " + std::to_string(max_n) + " exceeds the exact-computation ceiling " +
                              std::to_string(exact_ceiling()) + " (raise it with GRLB_MAX_N)");
    }
    const auto report = grlb::verify::run_verify(*suite, max_n);
    if (json) {
        std::cout << grlb::verify::to_json(report).dump(2) << "\n";
    } else {
        std::cout << grlb::verify::to_text(report);
    }
    return report.passed() ? 0 : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greatest Ricci lower bounds of rank-one horospherical manifolds"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* cmd_compute = app.add_subcommand("compute", "Compute R(X) for one manifold");
    cmd_compute->add_option("--family", compute.family, "X1, X2, X3, X4 or X5")->required();
    cmd_compute->add_option("--n", compute.n, "rank parameter n");
    cmd_compute->add_option("--k", compute.k, "Grassmannian parameter k (X3 only)");
    cmd_compute->add_option("--digits", compute.digits, "decimal digits")->check(CLI::Range(1, 1000));
    cmd_compute->add_option("--format", compute.format)->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_compute->add_option("--method", compute.method)->check(CLI::IsMember({"engine", "closed-form"}));

    int table_id = 0;
    std::string table_format = "text";
    std::optional<std::size_t> table_digits;
    auto* cmd_table = app.add_subcommand("table", "Regenerate one of the result tables");
    cmd_table->add_option("--id", table_id, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
    cmd_table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_table->add_option("--digits", table_digits, "decimal digits (default: published precision)")->check(CLI::Range(1, 1000));

    std::string suite;
    int max_n = 12;
    bool verify_json = false;
    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    cmd_verify->add_option("--suite", suite, "lemmas, closed-forms, oracle or bounds")->required();
    cmd_verify->add_option("--max-n", max_n, "largest n to check");
    cmd_verify->add_flag("--json", verify_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }

    try {
        if (*cmd_compute) {
            return run_compute(compute);
        }
        if (*cmd_table) {
            std::cout << grlb::tables::render_table(table_id, *grlb::tables::parse_format(table_format),
                                                    table_digits);
            return 0;
        }
        return run_verify(suite, max_n, verify_json);
    } catch (const grlb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == grlb::ErrorCode::invalid_datum || e.code() == grlb::ErrorCode::invalid_parameter
                   ? exit_invalid
                   : 1;
    }
}
