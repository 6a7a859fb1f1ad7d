#include "cli_app.hpp"

#include <samelson/bott_tables.hpp>
#include <samelson/chern.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

namespace samelson::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string bool_str(bool value) { return value ? "true" : "false"; }

ordered_json generator_json(const PsiGenerator& gen) {
    return ordered_json{{"k", gen.k},
                        {"chern_coeff", fraction_str(gen.chern_coeff)},
                        {"phi", gen.phi_value.get_str()},
                        {"sigma", gen.sigma},
                        {"psi", gen.psi_value.get_str()}};
}

// Orders outgrow 64-bit integers almost immediately, so order and closed_form
// travel as exact decimal strings in every machine format.
ordered_json record_json(const OrderReport& report, bool verbose) {
    ordered_json record{{"m", report.params.m},
                        {"n", report.params.n},
                        {"order", report.computed_order.get_str()},
                        {"closed_form", report.closed_form_order.get_str()},
                        {"match", report.match}};
    if (verbose) {
        ordered_json generators = ordered_json::array();
        for (const PsiGenerator& gen : report.generators) generators.push_back(generator_json(gen));
        record["generators"] = std::move(generators);
    }
    return record;
}

constexpr const char* csv_header = "m,n,order,closed_form,match";

std::string csv_row(const OrderReport& report) {
    return std::to_string(report.params.m) + "," + std::to_string(report.params.n) + "," +
           report.computed_order.get_str() + "," + report.closed_form_order.get_str() + "," +
           bool_str(report.match);
}

void write_generator_lines(const OrderReport& report, std::ostream& out) {
    for (const PsiGenerator& gen : report.generators) {
        out << "  k=" << gen.k << " sigma=" << gen.sigma << " chern=" << fraction_str(gen.chern_coeff)
            << " phi=" << gen.phi_value.get_str() << " psi=" << gen.psi_value.get_str() << "\n";
    }
}

void write_sweep_text(const std::vector<OrderReport>& reports, bool verbose, std::ostream& out) {
    size_t w_m = 1, w_n = 1, w_order = 5, w_closed = 11;
    for (const OrderReport& report : reports) {
        w_m = std::max(w_m, std::to_string(report.params.m).size());
        w_n = std::max(w_n, std::to_string(report.params.n).size());
        w_order = std::max(w_order, report.computed_order.get_str().size());
        w_closed = std::max(w_closed, report.closed_form_order.get_str().size());
    }
    out << std::left << std::setw(static_cast<int>(w_m) + 2) << "m"
        << std::setw(static_cast<int>(w_n) + 2) << "n"
        << std::setw(static_cast<int>(w_order) + 2) << "order"
        << std::setw(static_cast<int>(w_closed) + 2) << "closed_form"
        << "match" << "\n";
    for (const OrderReport& report : reports) {
        out << std::left << std::setw(static_cast<int>(w_m) + 2) << report.params.m
            << std::setw(static_cast<int>(w_n) + 2) << report.params.n
            << std::setw(static_cast<int>(w_order) + 2) << report.computed_order.get_str()
            << std::setw(static_cast<int>(w_closed) + 2) << report.closed_form_order.get_str()
            << bool_str(report.match) << "\n";
        if (verbose) write_generator_lines(report, out);
    }
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return Format::text;
}

}  // namespace

std::string fraction_str(const Rational& value) {
    if (value.is_zero()) return "0";
    return value.num().get_str() + "/" + value.den().get_str();
}

int run_compute(const ComputeOptions& options, std::ostream& out) {
    OrderReport report = compute_order(SamelsonParams(options.m, options.n));
    switch (options.format) {
        case Format::json:
            out << record_json(report, options.verbose).dump(2) << "\n";
            break;
        case Format::csv:
            out << csv_header << "\n" << csv_row(report) << "\n";
            break;
        case Format::text:
            out << "m=" << report.params.m << " n=" << report.params.n << "\n"
                << "order        " << report.computed_order.get_str() << "\n"
                << "closed_form  " << report.closed_form_order.get_str() << "\n"
                << "group        " << report.group_description << "\n"
                << "match        " << bool_str(report.match) << "\n";
            if (options.verbose) write_generator_lines(report, out);
            break;
    }
    return report.match ? exit_ok : exit_mismatch;
}

int run_sweep(const SweepOptions& options, std::ostream& out) {
    return run_sweep(options, out, complexification_sigma);
}

int run_sweep(const SweepOptions& options, std::ostream& out, const SigmaFn& sigma) {
    // lexicographic (n, m) order
    std::vector<OrderReport> reports;
    for (long n = 2; n <= options.max_n; ++n)
        for (long m = 1; m < n; ++m) reports.push_back(compute_order(SamelsonParams(m, n), sigma));

    bool all_match = true;
    for (const OrderReport& report : reports) all_match = all_match && report.match;

    switch (options.format) {
        case Format::json: {
            ordered_json records = ordered_json::array();
            for (const OrderReport& report : reports)
                records.push_back(record_json(report, options.verbose));
            out << records.dump(2) << "\n";
            break;
        }
        case Format::csv:
            out << csv_header << "\n";
            for (const OrderReport& report : reports) out << csv_row(report) << "\n";
            break;
        case Format::text:
            write_sweep_text(reports, options.verbose, out);
            break;
    }
    return all_match ? exit_ok : exit_mismatch;
}

int run_chern(const ChernOptions& options, std::ostream& out) {
    const Rational series = chern_via_series(options.j, options.k);
    const Rational stirling = chern_via_stirling(options.j, options.k);

    bool have_compositions = options.j <= 30;
    Rational compositions;
    if (have_compositions) compositions = chern_via_compositions(options.j, options.k);

    bool agree = series == stirling && (!have_compositions || compositions == series);

    switch (options.format) {
        case Format::json: {
            ordered_json record{{"j", options.j},
                                {"k", options.k},
                                {"series", fraction_str(series)},
                                {"compositions", nullptr},
                                {"stirling", fraction_str(stirling)},
                                {"agree", agree}};
            if (have_compositions)
                record["compositions"] = fraction_str(compositions);
            else
                record["note"] = "size limit";
            out << record.dump(2) << "\n";
            break;
        }
        case Format::csv:
            out << "j,k,series,compositions,stirling,agree\n"
                << options.j << "," << options.k << "," << fraction_str(series) << ","
                << (have_compositions ? fraction_str(compositions) : "") << ","
                << fraction_str(stirling) << "," << bool_str(agree) << "\n";
            break;
        case Format::text:
            out << fraction_str(series) << ", "
                << (have_compositions ? fraction_str(compositions) : "skipped (size limit)")
                << ", " << fraction_str(stirling) << ", " << (agree ? "agree" : "disagree")
                << "\n";
            break;
    }
    return agree ? exit_ok : exit_mismatch;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"order of the Samelson product <e_{m,n}, e_{m,n}> in Sp(n), exactly"};
    app.require_subcommand(1);

    long m = 0, n = 0, max_n = 0, j = 0, k = 0;
    std::string compute_format = "text", sweep_format = "text", chern_format = "text";
    bool compute_verbose = false, sweep_verbose = false;
    const auto format_check = CLI::IsMember({"text", "csv", "json"});

    CLI::App* compute = app.add_subcommand(
        "compute", "Order of one instance (m, n), checked against the closed form");
    compute->add_option("--m", m, "sphere parameter, 1 <= m < n")->required();
    compute->add_option("--n", n, "symplectic group rank")->required();
    compute->add_option("--format", compute_format, "text|csv|json")->check(format_check);
    compute->add_flag("--verbose", compute_verbose, "include the per-generator breakdown");

    CLI::App* sweep =
        app.add_subcommand("sweep", "All instances 1 <= m < n <= max-n, one record each");
    sweep->add_option("--max-n", max_n, "largest n, >= 2")->required();
    sweep->add_option("--format", sweep_format, "text|csv|json")->check(format_check);
    sweep->add_flag("--verbose", sweep_verbose, "include the per-generator breakdown");

    CLI::App* chern = app.add_subcommand(
        "chern", "Coefficient of t^j in ch(x^k), computed three independent ways");
    chern->add_option("--j", j, "t-degree, >= 1")->required();
    chern->add_option("--k", k, "power of x, >= 1")->required();
    chern->add_option("--format", chern_format, "text|csv|json")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (compute->parsed())
            return run_compute({m, n, parse_format(compute_format), compute_verbose}, out);
        if (sweep->parsed()) {
            if (max_n < 2) throw std::invalid_argument("sweep: --max-n must be >= 2");
            return run_sweep({max_n, parse_format(sweep_format), sweep_verbose}, out);
        }
        if (j < 1 || k < 1) throw std::invalid_argument("chern: --j and --k must be >= 1");
        return run_chern({j, k, parse_format(chern_format)}, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const std::exception& e) {
        // e.g. an integrality violation surfacing from the pipeline
        err << "error: " << e.what() << "\n";
        return exit_mismatch;
    }
}

}  // namespace samelson::cli
