#include "gowsn/config.hpp"

#include <cmath>
#include <set>
#include <string>

#include "gowsn/error.hpp"

namespace gowsn {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& why)
{
    throw Error(ErrorCode::InvalidConfig, key + ": " + why);
}

void reject_unknown(const json& obj, const std::string& where, const std::set<std::string>& allowed)
{
    if (!obj.is_object())
        bad(where.empty() ? "config" : where, "expected an object");
    for (auto const& [key, value] : obj.items()) {
        if (!allowed.count(key))
            bad(where.empty() ? key : where + "." + key, "unknown key");
    }
}

double get_number(const json& obj, const std::string& key, const std::string& path)
{
    auto const& v = obj.at(key);
    if (!v.is_number())
        bad(path, "expected a number");
    return v.get<double>();
}

long get_integer(const json& obj, const std::string& key, const std::string& path)
{
    auto const& v = obj.at(key);
    if (!v.is_number_integer())
        bad(path, "expected an integer");
    return v.get<long>();
}

std::uint64_t get_unsigned(const json& obj, const std::string& key, const std::string& path)
{
    auto const& v = obj.at(key);
    if (!v.is_number_unsigned())
        bad(path, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

bool get_bool(const json& obj, const std::string& key, const std::string& path)
{
    auto const& v = obj.at(key);
    if (!v.is_boolean())
        bad(path, "expected true or false");
    return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& path)
{
    auto const& v = obj.at(key);
    if (!v.is_string())
        bad(path, "expected a string");
    return v.get<std::string>();
}

std::optional<std::string> get_path(const json& obj, const std::string& key, const std::string& path)
{
    if (obj.at(key).is_null())
        return std::nullopt;
    return get_string(obj, key, path);
}

}  // namespace

std::string_view metric_name(Metric metric)
{
    return metric == Metric::Planar ? "planar" : "toroidal";
}

Metric parse_metric(std::string_view name)
{
    if (name == "planar")
        return Metric::Planar;
    if (name == "toroidal")
        return Metric::Toroidal;
    throw Error(ErrorCode::InvalidConfig, "metric: expected planar or toroidal");
}

std::string_view stopping_name(StoppingRule::Kind kind)
{
    return kind == StoppingRule::Kind::PaperLiteral ? "paper-literal" : "error-complement";
}

StoppingRule::Kind parse_stopping(std::string_view name)
{
    if (name == "paper-literal")
        return StoppingRule::Kind::PaperLiteral;
    if (name == "error-complement")
        return StoppingRule::Kind::ErrorComplement;
    throw Error(ErrorCode::InvalidConfig, "stopping.rule: expected paper-literal or error-complement");
}

HeuristicSet RunConfig::heuristic_set() const
{
    HeuristicSet hs;
    for (auto const& spec : heuristics)
        hs.add(builtin_heuristic(spec.name, spec.weight));
    return hs;
}

PlacementConfig RunConfig::placement() const
{
    PlacementConfig cfg;
    cfg.stopping = stopping;
    cfg.max_iterations = max_iterations;
    cfg.seed = seed;
    cfg.fig2_literal = fig2_literal;
    cfg.no_seed_node = no_seed_node;
    cfg.smoothing = smoothing;
    return cfg;
}

void RunConfig::validate() const
{
    try {
        (void)field();
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidConfig, std::string("field: ") + e.what());
    }
    double const pitch = resolved_pitch();
    if (!(pitch > 0.0) || !std::isfinite(pitch))
        bad("pitch_m", "must be positive");
    if (pitch > std::min(length_m, width_m))
        bad("pitch_m", "exceeds the field's shorter side");
    if (!(smoothing >= 0.0) || !std::isfinite(smoothing))
        bad("smoothing", "must be >= 0");
    if (!(stopping.threshold > 0.0 && stopping.threshold < 1.0))
        bad("stopping.threshold", "must lie in (0, 1)");
    (void)heuristic_set();
    if (mc.trials < 1)
        bad("mc.trials", "must be at least 1");
    if (mc.samples_per_trial < 1)
        bad("mc.samples_per_trial", "must be at least 1");
    if (n_min < 1 || n_max < n_min)
        bad("analyze", "requires 1 <= n_min <= n_max");
    if (coverage_n < 1)
        bad("analyze.coverage_n", "must be at least 1");
    if (eq2_nodes < 2)
        bad("validate.eq2_nodes", "must be at least 2");
    if (coverage_nodes < 2)
        bad("validate.coverage_nodes", "must be at least 2");
    if (two_node_trials < 1)
        bad("validate.two_node_trials", "must be at least 1");
    if (compare_trials < 2)
        bad("compare.trials", "must be at least 2");
}

RunConfig config_from_json(const json& doc, RunConfig cfg)
{
    reject_unknown(doc, "",
                   {"field", "pitch_m", "heuristics", "smoothing", "fig2_literal", "no_seed_node", "stopping",
                    "max_iterations", "seed", "mc", "analyze", "validate", "compare", "output"});

    if (doc.contains("field")) {
        auto const& f = doc["field"];
        reject_unknown(f, "field", {"length_m", "width_m", "range_m"});
        if (f.contains("length_m"))
            cfg.length_m = get_number(f, "length_m", "field.length_m");
        if (f.contains("width_m"))
            cfg.width_m = get_number(f, "width_m", "field.width_m");
        if (f.contains("range_m"))
            cfg.range_m = get_number(f, "range_m", "field.range_m");
    }
    if (doc.contains("pitch_m")) {
        if (doc["pitch_m"].is_null())
            cfg.pitch_m.reset();
        else
            cfg.pitch_m = get_number(doc, "pitch_m", "pitch_m");
    }
    if (doc.contains("heuristics")) {
        auto const& list = doc["heuristics"];
        if (!list.is_array())
            bad("heuristics", "expected an array");
        cfg.heuristics.clear();
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::string const path = "heuristics[" + std::to_string(i) + "]";
            reject_unknown(list[i], path, {"name", "weight"});
            if (!list[i].contains("name"))
                bad(path + ".name", "missing");
            HeuristicSpec spec{get_string(list[i], "name", path + ".name"), 1.0};
            if (list[i].contains("weight"))
                spec.weight = get_number(list[i], "weight", path + ".weight");
            cfg.heuristics.push_back(spec);
        }
    }
    if (doc.contains("smoothing"))
        cfg.smoothing = get_number(doc, "smoothing", "smoothing");
    if (doc.contains("fig2_literal"))
        cfg.fig2_literal = get_bool(doc, "fig2_literal", "fig2_literal");
    if (doc.contains("no_seed_node"))
        cfg.no_seed_node = get_bool(doc, "no_seed_node", "no_seed_node");
    if (doc.contains("stopping")) {
        auto const& s = doc["stopping"];
        reject_unknown(s, "stopping", {"rule", "threshold"});
        if (s.contains("rule"))
            cfg.stopping.kind = parse_stopping(get_string(s, "rule", "stopping.rule"));
        if (s.contains("threshold"))
            cfg.stopping.threshold = get_number(s, "threshold", "stopping.threshold");
    }
    if (doc.contains("max_iterations"))
        cfg.max_iterations = get_unsigned(doc, "max_iterations", "max_iterations");
    if (doc.contains("seed"))
        cfg.seed = get_unsigned(doc, "seed", "seed");
    if (doc.contains("mc")) {
        auto const& m = doc["mc"];
        reject_unknown(m, "mc", {"trials", "samples_per_trial", "metric", "master_seed"});
        if (m.contains("trials"))
            cfg.mc.trials = get_integer(m, "trials", "mc.trials");
        if (m.contains("samples_per_trial"))
            cfg.mc.samples_per_trial = get_integer(m, "samples_per_trial", "mc.samples_per_trial");
        if (m.contains("metric"))
            cfg.mc.metric = parse_metric(get_string(m, "metric", "mc.metric"));
        if (m.contains("master_seed"))
            cfg.mc.master_seed = get_unsigned(m, "master_seed", "mc.master_seed");
    }
    if (doc.contains("analyze")) {
        auto const& a = doc["analyze"];
        reject_unknown(a, "analyze", {"n_min", "n_max", "coverage_n"});
        if (a.contains("n_min"))
            cfg.n_min = get_integer(a, "n_min", "analyze.n_min");
        if (a.contains("n_max"))
            cfg.n_max = get_integer(a, "n_max", "analyze.n_max");
        if (a.contains("coverage_n"))
            cfg.coverage_n = get_integer(a, "coverage_n", "analyze.coverage_n");
    }
    if (doc.contains("validate")) {
        auto const& v = doc["validate"];
        reject_unknown(v, "validate", {"eq2_nodes", "coverage_nodes", "two_node_trials"});
        if (v.contains("eq2_nodes"))
            cfg.eq2_nodes = get_integer(v, "eq2_nodes", "validate.eq2_nodes");
        if (v.contains("coverage_nodes"))
            cfg.coverage_nodes = get_integer(v, "coverage_nodes", "validate.coverage_nodes");
        if (v.contains("two_node_trials"))
            cfg.two_node_trials = get_integer(v, "two_node_trials", "validate.two_node_trials");
    }
    if (doc.contains("compare")) {
        auto const& c = doc["compare"];
        reject_unknown(c, "compare", {"trials"});
        if (c.contains("trials"))
            cfg.compare_trials = get_integer(c, "trials", "compare.trials");
    }
    if (doc.contains("output")) {
        auto const& o = doc["output"];
        reject_unknown(o, "output", {"out", "trace", "coverage_out"});
        if (o.contains("out"))
            cfg.out = get_path(o, "out", "output.out");
        if (o.contains("trace"))
            cfg.trace = get_path(o, "trace", "output.trace");
        if (o.contains("coverage_out"))
            cfg.coverage_out = get_path(o, "coverage_out", "output.coverage_out");
    }
    return cfg;
}

json config_to_json(const RunConfig& cfg)
{
    json heuristics = json::array();
    for (auto const& h : cfg.heuristics)
        heuristics.push_back({{"name", h.name}, {"weight", h.weight}});
    auto opt = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
    return {
        {"field", {{"length_m", cfg.length_m}, {"width_m", cfg.width_m}, {"range_m", cfg.range_m}}},
        {"pitch_m", cfg.resolved_pitch()},
        {"heuristics", heuristics},
        {"smoothing", cfg.smoothing},
        {"fig2_literal", cfg.fig2_literal},
        {"no_seed_node", cfg.no_seed_node},
        {"stopping", {{"rule", stopping_name(cfg.stopping.kind)}, {"threshold", cfg.stopping.threshold}}},
        {"max_iterations", cfg.max_iterations},
        {"seed", cfg.seed},
        {"mc",
         {{"trials", cfg.mc.trials},
          {"samples_per_trial", cfg.mc.samples_per_trial},
          {"metric", metric_name(cfg.mc.metric)},
          {"master_seed", cfg.mc.master_seed}}},
        {"analyze", {{"n_min", cfg.n_min}, {"n_max", cfg.n_max}, {"coverage_n", cfg.coverage_n}}},
        {"validate",
         {{"eq2_nodes", cfg.eq2_nodes},
          {"coverage_nodes", cfg.coverage_nodes},
          {"two_node_trials", cfg.two_node_trials}}},
        {"compare", {{"trials", cfg.compare_trials}}},
        {"output", {{"out", opt(cfg.out)}, {"trace", opt(cfg.trace)}, {"coverage_out", opt(cfg.coverage_out)}}},
    };
}

}  // namespace gowsn
