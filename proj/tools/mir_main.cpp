#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json_report.hpp"
#include "mir/errors.hpp"
#include "mir/hilbert.hpp"
#include "mir/ideal.hpp"
#include "mir/ideal_io.hpp"
#include "mir/polarize.hpp"
#include "mir/polyhedral.hpp"
#include "mir/simplicial.hpp"

namespace {

using mir::report::ordered_json;

// Exit code convention: 0 success/verified, 1 verification found a mismatch
// or the star condition does not apply, 2 invalid input, 3 resource guard.
constexpr int kExitVerified = 0;
constexpr int kExitUnverified = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResource = 3;

struct CommonOptions {
    std::string input = "-";
    std::string format = "text";
    bool pretty = false;
};

std::shared_ptr<CommonOptions> add_common_options(CLI::App* cmd) {
    auto opts = std::make_shared<CommonOptions>();
    cmd->add_option("input", opts->input, "ideal file path, or - for standard input");
    cmd->add_option("--format", opts->format, "input format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_flag("--pretty", opts->pretty, "indent the JSON report");
    return opts;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw mir::ValidationError("cannot open input file: " + path);
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

mir::MonomialIdeal load_ideal(const CommonOptions& opts) {
    return mir::parse_ideal(read_input(opts.input), opts.format).to_ideal();
}

void emit(const ordered_json& report, bool pretty) {
    std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
}

std::string denominator_display(int power, bool topological) {
    return std::string("(1 - t") + (topological ? "^2" : "") + ")^" + std::to_string(power);
}

int run_minimalize(const CommonOptions& opts) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    ordered_json report;
    report["command"] = "minimalize";
    report["ideal"] = mir::report::ideal_json(ideal);
    emit(report, opts.pretty);
    return kExitVerified;
}

int run_polarize(const CommonOptions& opts) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    const mir::PolarizationResult polarized = mir::polarize(ideal);
    ordered_json report;
    report["command"] = "polarize";
    report["original"] = mir::report::ideal_json(ideal);
    report["polarization"] = mir::report::polarization_json(polarized);
    emit(report, opts.pretty);
    return kExitVerified;
}

int run_depolarize_check(const CommonOptions& opts) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    const mir::DepolarizationReport result = mir::verify_depolarization_quotient(ideal);
    ordered_json report;
    report["command"] = "depolarize-check";
    report["verified"] = result.verified;
    report["linear_form_count"] = result.linear_form_count;
    report["original"] = mir::report::ideal_json(result.original);
    report["recovered"] = mir::report::ideal_json(result.recovered);
    emit(report, opts.pretty);
    return result.verified ? kExitVerified : kExitUnverified;
}

int run_hilbert(const CommonOptions& opts, std::int64_t coeff_degree, bool topological) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    const mir::HilbertSeries series = mir::hilbert_series(ideal);
    const mir::IntPolynomial numerator =
        topological ? mir::topological_regrade(series.numerator) : series.numerator;
    ordered_json report;
    report["command"] = "hilbert";
    report["grading"] = topological ? "topological" : "algebraic";
    report["numerator"] = mir::report::polynomial_json(numerator);
    report["denominator_power"] = series.denominator_power;
    report["denominator_display"] = denominator_display(series.denominator_power, topological);
    if (coeff_degree >= 0) {
        const auto degree = static_cast<std::uint64_t>(coeff_degree);
        if (topological) {
            // Degree d in the algebraic grading sits at 2d topologically;
            // odd topological degrees are empty.
            const std::vector<std::int64_t> algebraic =
                mir::series_coefficients(series, degree / 2);
            std::vector<std::int64_t> doubled(degree + 1, 0);
            for (std::size_t k = 0; 2 * k <= degree; ++k) doubled[2 * k] = algebraic[k];
            report["coefficients"] = doubled;
        } else {
            report["coefficients"] = mir::series_coefficients(series, degree);
        }
    }
    emit(report, opts.pretty);
    return kExitVerified;
}

int run_sr_complex(const CommonOptions& opts) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    const mir::SimplicialComplex complex = mir::sr_complex(ideal);
    ordered_json report;
    report["command"] = "sr-complex";
    report["ideal"] = mir::report::ideal_json(ideal);
    report["complex"] = mir::report::complex_json(complex);
    emit(report, opts.pretty);
    return kExitVerified;
}

int run_froeberg_check(const CommonOptions& opts) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    const mir::FroebergReport result = mir::froeberg_check(ideal);
    ordered_json report;
    report["command"] = "froeberg-check";
    report["invariant"] = result.invariant;
    report["grading"] = "algebraic";
    report["original"] = mir::report::polynomial_json(result.original);
    report["polarized"] = mir::report::polynomial_json(result.polarized);
    emit(report, opts.pretty);
    return result.invariant ? kExitVerified : kExitUnverified;
}

int run_classify(const CommonOptions& opts) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    ordered_json report;
    report["command"] = "classify";
    try {
        const mir::PairAssignment pairs = mir::classify_variables(ideal);
        report["applicable"] = true;
        report["star"] = mir::report::star_json(mir::check_star(ideal));
        report["pairs"] = mir::report::pairs_json(pairs);
        emit(report, opts.pretty);
        return kExitVerified;
    } catch (const mir::StarConditionError& e) {
        report["applicable"] = false;
        report["star"] = mir::report::star_json(e.report());
        emit(report, opts.pretty);
        return kExitUnverified;
    }
}

int run_realize(const CommonOptions& opts) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    const mir::RealizationReport result = mir::verify_realization(ideal);
    ordered_json report;
    report["command"] = "realize";
    const ordered_json body = mir::report::realization_json(result);
    for (const auto& [key, value] : body.items()) report[key] = value;
    emit(report, opts.pretty);
    return (result.applicable && result.verified) ? kExitVerified : kExitUnverified;
}

int run_oracle(const CommonOptions& opts, std::uint64_t max_degree) {
    const mir::MonomialIdeal ideal = load_ideal(opts);
    const mir::HilbertSeries series = mir::hilbert_series(ideal);
    const std::vector<std::int64_t> expansion = mir::series_coefficients(series, max_degree);
    ordered_json degrees = ordered_json::array();
    bool all_match = true;
    for (std::uint64_t d = 0; d <= max_degree; ++d) {
        const std::uint64_t count = ideal.standard_monomials(d).size();
        const bool match =
            expansion[d] >= 0 && static_cast<std::uint64_t>(expansion[d]) == count;
        all_match = all_match && match;
        ordered_json entry;
        entry["degree"] = d;
        entry["series_coefficient"] = expansion[d];
        entry["standard_monomial_count"] = count;
        entry["match"] = match;
        degrees.push_back(std::move(entry));
    }
    ordered_json report;
    report["command"] = "oracle";
    report["max_degree"] = max_degree;
    report["matches"] = all_match;
    report["grading"] = "algebraic";
    report["numerator"] = mir::report::polynomial_json(series.numerator);
    report["denominator_power"] = series.denominator_power;
    report["degrees"] = std::move(degrees);
    emit(report, opts.pretty);
    return all_match ? kExitVerified : kExitUnverified;
}

int emit_error(const std::string& type, const std::string& message, int code) {
    ordered_json report;
    report["error"]["type"] = type;
    report["error"]["message"] = message;
    std::cout << report.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial ideal rings: polarization, Hilbert series, and "
                 "polyhedral-product presentations"};
    app.require_subcommand(1);

    CLI::App* cmd_minimalize =
        app.add_subcommand("minimalize", "canonical minimal generating set");
    auto opts_minimalize = add_common_options(cmd_minimalize);

    CLI::App* cmd_polarize =
        app.add_subcommand("polarize", "square-free polarization with its linear forms");
    auto opts_polarize = add_common_options(cmd_polarize);

    CLI::App* cmd_depolarize = app.add_subcommand(
        "depolarize-check", "verify that identifying the polarized variables recovers the input");
    auto opts_depolarize = add_common_options(cmd_depolarize);

    CLI::App* cmd_hilbert =
        app.add_subcommand("hilbert", "Hilbert series numerator over (1-t)^n");
    auto opts_hilbert = add_common_options(cmd_hilbert);
    std::int64_t hilbert_coeffs = -1;
    cmd_hilbert->add_option("--coeffs", hilbert_coeffs,
                            "also expand the series up to this degree")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{100000}));
    bool hilbert_topological = false;
    cmd_hilbert->add_flag("--topological", hilbert_topological,
                          "report in the topological grading (degrees doubled)");

    CLI::App* cmd_sr = app.add_subcommand(
        "sr-complex", "simplicial complex of a square-free ideal, with f-vector");
    auto opts_sr = add_common_options(cmd_sr);

    CLI::App* cmd_froeberg = app.add_subcommand(
        "froeberg-check", "compare the K-polynomial before and after polarization");
    auto opts_froeberg = add_common_options(cmd_froeberg);

    CLI::App* cmd_classify = app.add_subcommand(
        "classify", "per-variable CW-pair classification under the star condition");
    auto opts_classify = add_common_options(cmd_classify);

    CLI::App* cmd_realize = app.add_subcommand(
        "realize", "verify the polyhedral-product presentation round-trip");
    auto opts_realize = add_common_options(cmd_realize);

    CLI::App* cmd_oracle = app.add_subcommand(
        "oracle", "check series coefficients against brute-force monomial counts");
    auto opts_oracle = add_common_options(cmd_oracle);
    std::uint64_t oracle_degree = 0;
    cmd_oracle->add_option("--max-degree", oracle_degree, "highest degree to check")
        ->required()
        ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1000}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (app.got_subcommand(cmd_minimalize)) return run_minimalize(*opts_minimalize);
        if (app.got_subcommand(cmd_polarize)) return run_polarize(*opts_polarize);
        if (app.got_subcommand(cmd_depolarize)) return run_depolarize_check(*opts_depolarize);
        if (app.got_subcommand(cmd_hilbert)) {
            return run_hilbert(*opts_hilbert, hilbert_coeffs, hilbert_topological);
        }
        if (app.got_subcommand(cmd_sr)) return run_sr_complex(*opts_sr);
        if (app.got_subcommand(cmd_froeberg)) return run_froeberg_check(*opts_froeberg);
        if (app.got_subcommand(cmd_classify)) return run_classify(*opts_classify);
        if (app.got_subcommand(cmd_realize)) return run_realize(*opts_realize);
        if (app.got_subcommand(cmd_oracle)) return run_oracle(*opts_oracle, oracle_degree);
    } catch (const mir::ParseError& e) {
        ordered_json report;
        report["error"]["type"] = "parse";
        report["error"]["message"] = e.what();
        report["error"]["line"] = e.line();
        report["error"]["column"] = e.column();
        std::cout << report.dump() << "\n";
        return kExitInvalidInput;
    } catch (const mir::StarConditionError& e) {
        ordered_json report;
        report["error"]["type"] = "star-condition";
        report["error"]["message"] = e.what();
        report["star"] = mir::report::star_json(e.report());
        std::cout << report.dump() << "\n";
        return kExitUnverified;
    } catch (const mir::ValidationError& e) {
        return emit_error("validation", e.what(), kExitInvalidInput);
    } catch (const mir::ResourceError& e) {
        return emit_error("resource", e.what(), kExitResource);
    } catch (const mir::Error& e) {
        return emit_error("error", e.what(), kExitInvalidInput);
    }
    return kExitInvalidInput;
}
