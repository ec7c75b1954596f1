#include "gowsn/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gowsn/analytics.hpp"
#include "gowsn/config.hpp"
#include "gowsn/error.hpp"

namespace gowsn {

using nlohmann::json;

std::string format_number(double value)
{
    char buf[64];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf, end);
}

json deployment_to_json(const Deployment& dep)
{
    json nodes = json::array();
    for (auto const& p : dep.nodes)
        nodes.push_back({p.x_m, p.y_m});
    return {
        {"field",
         {{"length_m", dep.field.length_m()}, {"width_m", dep.field.width_m()}, {"range_m", dep.field.range_m()}}},
        {"metric", metric_name(dep.metric)},
        {"nodes", nodes},
    };
}

Deployment deployment_from_json(const json& doc)
{
    try {
        auto const& f = doc.at("field");
        FieldSpec const field(f.at("length_m").get<double>(), f.at("width_m").get<double>(),
                              f.at("range_m").get<double>());
        Deployment dep{field, {}, parse_metric(doc.at("metric").get<std::string>())};
        for (auto const& node : doc.at("nodes")) {
            if (!node.is_array() || node.size() != 2)
                throw Error(ErrorCode::InvalidConfig, "nodes: each node must be [x, y]");
            Position const p{node[0].get<double>(), node[1].get<double>()};
            if (p.x_m < 0.0 || p.x_m > field.length_m() || p.y_m < 0.0 || p.y_m > field.width_m())
                throw Error(ErrorCode::InvalidConfig, "nodes: position outside the field");
            dep.nodes.push_back(p);
        }
        return dep;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, std::string("deployment: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidConfig)
            throw;
        throw Error(ErrorCode::InvalidConfig, std::string("deployment: ") + e.what());
    }
}

json placement_to_json(const PlacementResult& result)
{
    json doc = deployment_to_json(result.deployment);
    doc["n_final"] = result.n_final;
    doc["lambda_final"] = result.lambda_final;
    doc["p_final"] = result.p_final;
    doc["iterations"] = result.iterations;
    return doc;
}

std::string trace_csv(const PlacementResult& result)
{
    std::ostringstream os;
    os << "iter,N,lambda,p,row,col,skipped\n";
    for (auto const& e : result.trace) {
        os << e.iteration << ',' << e.n << ',' << format_number(e.lambda) << ',' << format_number(e.p) << ','
           << e.drawn.row << ',' << e.drawn.col << ',' << (e.chosen ? 0 : 1) << '\n';
    }
    return os.str();
}

std::string analyze_csv(const FieldSpec& field, long n_min, long n_max)
{
    if (n_min < 1 || n_max < n_min)
        throw Error(ErrorCode::InvalidRange, "requires 1 <= n_min <= n_max");
    std::ostringstream os;
    os << "N,lambda,p_connect,shaping\n";
    for (long n = n_min; n <= n_max; ++n) {
        double const lambda = density({n, field.range_m(), field.area()});
        os << n << ',' << format_number(lambda) << ',' << format_number(connectivity_probability(lambda, n)) << ','
           << format_number(shaping(n, field.range_m(), field.length_m())) << '\n';
    }
    return os.str();
}

std::string coverage_csv(const FieldSpec& field, long n_nodes)
{
    auto const model = CoverageModel::from_field(field, n_nodes);
    std::ostringstream os;
    os << "n,binomial,poisson\n";
    for (long n = 0; n < n_nodes; ++n) {
        os << n << ',' << format_number(coverage_binomial(n, model)) << ','
           << format_number(coverage_poisson(n, model.lambda_s())) << '\n';
    }
    return os.str();
}

std::string compare_csv(const ComparisonReport& report)
{
    std::ostringstream os;
    os << "strategy,trial,no_isolated,min_pairwise_m\n";
    for (auto const* stats : {&report.heuristic, &report.baseline}) {
        for (auto const& row : stats->trials) {
            os << row.strategy << ',' << row.trial << ',' << (row.no_isolated ? 1 : 0) << ','
               << format_number(row.min_pairwise_m) << '\n';
        }
    }
    return os.str();
}

json mc_report_to_json(const McReport& report)
{
    return {
        {"estimate", report.estimate},
        {"std_error", report.std_error},
        {"trials", report.trials},
        {"analytic_reference", report.analytic_reference},
        {"abs_deviation", report.abs_deviation},
    };
}

void write_file_atomic(const std::string& path, std::string_view contents)
{
    std::string const tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorCode::InvalidConfig, "cannot open '" + tmp + "' for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out)
            throw Error(ErrorCode::InvalidConfig, "failed writing '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw Error(ErrorCode::InvalidConfig, "cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

}  // namespace gowsn
