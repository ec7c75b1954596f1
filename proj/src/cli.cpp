#include "gowsn/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gowsn/analytics.hpp"
#include "gowsn/error.hpp"
#include "gowsn/io.hpp"
#include "gowsn/placement.hpp"

namespace gowsn {

using nlohmann::json;

namespace {

constexpr double kEq2Envelope = 0.05;
constexpr double kTvEnvelope = 0.02;

double binomial_sigma(double p, long trials)
{
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

// |estimate - reference| against max(floor, 3 sigma), sigma taken as the
// larger of the empirical and the reference-based standard error so a tiny
// trial count cannot collapse the envelope to zero.
ValidationCheck proportion_check(const std::string& name, const McReport& report, double floor)
{
    double const sigma = std::max(report.std_error, binomial_sigma(report.analytic_reference, report.trials));
    double const envelope = std::max(floor, 3.0 * sigma);
    return {name, report.abs_deviation, envelope, report.abs_deviation <= envelope};
}

}  // namespace

json ValidationReport::to_json() const
{
    json checks_json = json::array();
    for (auto const& c : checks)
        checks_json.push_back({{"name", c.name}, {"value", c.value}, {"envelope", c.envelope}, {"pass", c.pass}});
    json out{
        {"eq2", mc_report_to_json(eq2)},
        {"two_node", mc_report_to_json(two_node)},
        {"eq4_tv", eq4_tv},
        {"eq6_tv", eq6_tv},
        {"binomial_poisson_tv", binomial_poisson_tv},
        {"checks", checks_json},
        {"pass", pass},
    };
    if (eq2_planar)
        out["eq2_planar"] = mc_report_to_json(*eq2_planar);
    return out;
}

double tv_envelope(std::span<const double> reference, double samples, double floor)
{
    double noise = 0.0;
    for (double q : reference)
        noise += std::sqrt(q * (1.0 - q) / samples);
    return std::max(floor, 3.0 * 0.5 * noise);
}

ValidationReport run_validation(const RunConfig& cfg, const ValidationHooks& hooks)
{
    cfg.validate();
    FieldSpec const field = cfg.field();
    if (!field.is_square())
        throw Error(ErrorCode::NonSquareField, "validate requires length_m == width_m");

    ValidationReport report;

    report.eq2 = mc_no_isolated_probability(field, cfg.eq2_nodes, cfg.mc);
    report.eq2.analytic_reference += hooks.reference_bias;
    report.eq2.abs_deviation = std::abs(report.eq2.estimate - report.eq2.analytic_reference);
    report.checks.push_back(proportion_check("eq2_no_isolated", report.eq2, kEq2Envelope));
    if (cfg.mc.metric == Metric::Toroidal) {
        McConfig planar_cfg = cfg.mc;
        planar_cfg.metric = Metric::Planar;
        report.eq2_planar = mc_no_isolated_probability(field, cfg.eq2_nodes, planar_cfg);
    }

    // Two nodes on the torus touch with probability exactly pi R^2 / A.
    McConfig two_node_cfg = cfg.mc;
    two_node_cfg.trials = cfg.two_node_trials;
    two_node_cfg.metric = Metric::Toroidal;
    report.two_node = mc_no_isolated_probability(field, 2, two_node_cfg);
    report.two_node.analytic_reference = two_node_contact_probability(field);
    report.two_node.abs_deviation = std::abs(report.two_node.estimate - report.two_node.analytic_reference);
    report.checks.push_back(proportion_check("two_node_contact", report.two_node, 0.0));

    auto const histogram = mc_coverage_histogram(field, cfg.coverage_nodes, cfg.mc);
    auto const model = CoverageModel::from_field(field, cfg.coverage_nodes);
    auto const binomial = binomial_distribution(model);
    auto const poisson = poisson_distribution(model.lambda_s(), poisson_truncation(model.lambda_s()));
    double const samples = static_cast<double>(cfg.mc.trials) * static_cast<double>(cfg.mc.samples_per_trial);

    report.eq4_tv = tv_distance(histogram, binomial);
    report.eq6_tv = tv_distance(histogram, poisson);
    report.binomial_poisson_tv = tv_distance(binomial, poisson);
    double const eq4_envelope = tv_envelope(binomial, samples, kTvEnvelope);
    double const eq6_envelope = tv_envelope(poisson, samples, kTvEnvelope);
    report.checks.push_back({"eq4_tv", report.eq4_tv, eq4_envelope, report.eq4_tv <= eq4_envelope});
    report.checks.push_back({"eq6_tv", report.eq6_tv, eq6_envelope, report.eq6_tv <= eq6_envelope});

    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](auto const& c) { return c.pass; });
    return report;
}

//---------------------------------------------------------------------------//

namespace {

struct Flags {
    std::optional<std::string> config;
    std::optional<std::uint64_t> seed;
    std::optional<double> pitch;
    std::optional<std::string> stopping;
    std::optional<double> threshold;
    std::optional<std::string> metric;
    bool fig2_literal = false;
    std::optional<std::string> out;
    std::optional<std::string> trace;
    bool print_config = false;
    std::optional<long> n_min;
    std::optional<long> n_max;
    std::optional<long> coverage_n;
    std::optional<std::string> coverage_out;
    std::optional<long> trials;
};

RunConfig resolve_config(const Flags& flags)
{
    RunConfig cfg;
    if (flags.config) {
        std::ifstream in(*flags.config);
        if (!in)
            throw Error(ErrorCode::InvalidConfig, "cannot read config '" + *flags.config + "'");
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidConfig, "config is not valid JSON: " + std::string(e.what()));
        }
        cfg = config_from_json(doc);
    }
    if (flags.seed) {
        cfg.seed = *flags.seed;
        cfg.mc.master_seed = *flags.seed;
    }
    if (flags.pitch)
        cfg.pitch_m = *flags.pitch;
    if (flags.stopping)
        cfg.stopping.kind = parse_stopping(*flags.stopping);
    if (flags.threshold)
        cfg.stopping.threshold = *flags.threshold;
    if (flags.metric)
        cfg.mc.metric = parse_metric(*flags.metric);
    if (flags.fig2_literal)
        cfg.fig2_literal = true;
    if (flags.out)
        cfg.out = *flags.out;
    if (flags.trace)
        cfg.trace = *flags.trace;
    if (flags.n_min)
        cfg.n_min = *flags.n_min;
    if (flags.n_max)
        cfg.n_max = *flags.n_max;
    if (flags.coverage_n)
        cfg.coverage_n = *flags.coverage_n;
    if (flags.coverage_out)
        cfg.coverage_out = *flags.coverage_out;
    if (flags.trials)
        cfg.compare_trials = *flags.trials;
    return cfg;
}

void emit(const std::optional<std::string>& path, std::string_view contents, std::ostream& out)
{
    if (path)
        write_file_atomic(*path, contents);
    else
        out << contents;
}

int cmd_place(const RunConfig& cfg, std::ostream& out)
{
    FieldSpec const field = cfg.field();
    GridBoard board = make_board(field, cfg.resolved_pitch());
    auto const result = go_heuristics_place(field, board, cfg.heuristic_set(), cfg.placement());
    emit(cfg.out, placement_to_json(result).dump(2) + "\n", out);
    if (cfg.trace)
        write_file_atomic(*cfg.trace, trace_csv(result));
    return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out)
{
    FieldSpec const field = cfg.field();
    if (!field.is_square())
        throw Error(ErrorCode::NonSquareField, "analyze requires length_m == width_m");
    std::string const table = analyze_csv(field, cfg.n_min, cfg.n_max);
    std::string const coverage = coverage_csv(field, cfg.coverage_n);
    if (cfg.out) {
        write_file_atomic(*cfg.out, table);
        std::filesystem::path derived(*cfg.out);
        derived.replace_extension(".coverage.csv");
        write_file_atomic(cfg.coverage_out.value_or(derived.string()), coverage);
    } else {
        out << table;
        if (cfg.coverage_out)
            write_file_atomic(*cfg.coverage_out, coverage);
        else
            out << '\n' << coverage;
    }
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg, const ValidationHooks& hooks, std::ostream& out, std::ostream& err)
{
    auto const report = run_validation(cfg, hooks);
    emit(cfg.out, report.to_json().dump(2) + "\n", out);
    if (report.pass)
        return kExitOk;
    std::string failed;
    for (auto const& c : report.checks) {
        if (!c.pass)
            failed += " " + c.name + "=" + format_number(c.value) + ">" + format_number(c.envelope);
    }
    err << "error: EnvelopeBreach:" << failed << '\n';
    return kExitEnvelopeBreach;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    FieldSpec const field = cfg.field();
    GridBoard const board = make_board(field, cfg.resolved_pitch());
    auto const report = compare_strategies(field, board, cfg.heuristic_set(), cfg.placement(),
                                           cfg.compare_trials, cfg.mc.master_seed);
    emit(cfg.out, compare_csv(report), out);
    std::ostream& summary = cfg.out ? out : err;
    summary << "summary: N=" << report.n_nodes << " heuristic_no_isolated_rate="
            << format_number(report.heuristic.no_isolated_rate)
            << " uniform_no_isolated_rate=" << format_number(report.baseline.no_isolated_rate)
            << " heuristic_mean_min_pairwise_m=" << format_number(report.heuristic.mean_min_pairwise_m)
            << " uniform_mean_min_pairwise_m=" << format_number(report.baseline.mean_min_pairwise_m) << '\n';
    return kExitOk;
}

std::string single_line(std::string text)
{
    for (char& c : text) {
        if (c == '\n' || c == '\r')
            c = ' ';
    }
    while (!text.empty() && text.back() == ' ')
        text.pop_back();
    return text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const ValidationHooks& hooks)
{
    CLI::App app{"Heuristic sensor placement and density/coverage analytics", "gowsn"};
    app.require_subcommand(1);
    Flags flags;

    auto add_common = [&flags](CLI::App* cmd) {
        cmd->add_option("--config", flags.config, "Run config JSON");
        cmd->add_option("--seed", flags.seed, "Random seed (placement and Monte Carlo)");
        cmd->add_option("--pitch", flags.pitch, "Board lattice pitch in meters");
        cmd->add_option("--stopping", flags.stopping, "Stopping rule")
            ->check(CLI::IsMember({"paper-literal", "error-complement"}));
        cmd->add_option("--threshold", flags.threshold, "Stopping threshold in (0, 1)");
        cmd->add_option("--metric", flags.metric, "Monte Carlo metric")
            ->check(CLI::IsMember({"planar", "toroidal"}));
        cmd->add_flag("--fig2-literal", flags.fig2_literal, "Draw over all intersections, skip occupied draws");
        cmd->add_option("--out", flags.out, "Output path (default stdout)");
        cmd->add_option("--trace", flags.trace, "Trace CSV path");
        cmd->add_flag("--print-config", flags.print_config, "Print the resolved config and exit");
    };

    auto* place = app.add_subcommand("place", "Run heuristic placement");
    auto* analyze = app.add_subcommand("analyze", "Emit density/connectivity/shaping tables");
    auto* validate = app.add_subcommand("validate", "Check closed forms against Monte Carlo");
    auto* compare = app.add_subcommand("compare", "Compare heuristic and uniform placement");
    for (auto* cmd : {place, analyze, validate, compare})
        add_common(cmd);
    analyze->add_option("--n-min", flags.n_min, "Smallest N");
    analyze->add_option("--n-max", flags.n_max, "Largest N");
    analyze->add_option("--coverage-n", flags.coverage_n, "N for the coverage distribution table");
    analyze->add_option("--coverage-out", flags.coverage_out, "Coverage CSV path");
    compare->add_option("--trials", flags.trials, "Paired trials");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: Usage: " << single_line(e.what()) << '\n';
        return kExitConfig;
    }

    try {
        RunConfig const cfg = resolve_config(flags);
        cfg.validate();
        if (flags.print_config) {
            out << config_to_json(cfg).dump(2) << '\n';
            return kExitOk;
        }
        if (place->parsed())
            return cmd_place(cfg, out);
        if (analyze->parsed()) {
            if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
                throw Error(ErrorCode::InvalidRange, "requires 1 <= n_min <= n_max");
            return cmd_analyze(cfg, out);
        }
        if (validate->parsed())
            return cmd_validate(cfg, hooks, out, err);
        return cmd_compare(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << single_line(e.what()) << '\n';
        bool const exhausted =
            e.code() == ErrorCode::BoardExhausted || e.code() == ErrorCode::IterationCapExceeded;
        return exhausted ? kExitBoardExhausted : kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << single_line(e.what()) << '\n';
        return kExitConfig;
    }
}

}  // namespace gowsn
