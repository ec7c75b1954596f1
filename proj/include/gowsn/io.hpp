#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gowsn/field_model.hpp"
#include "gowsn/montecarlo.hpp"
#include "gowsn/placement.hpp"

namespace gowsn {

/// 12 significant digits, shortest form, independent of the C locale.
std::string format_number(double value);

nlohmann::json deployment_to_json(const Deployment& dep);
/// Throws InvalidConfig on schema violations or nodes outside the field.
Deployment deployment_from_json(const nlohmann::json& doc);

/// Deployment fields plus n_final, lambda_final, p_final, iterations.
nlohmann::json placement_to_json(const PlacementResult& result);

/// iter,N,lambda,p,row,col,skipped
std::string trace_csv(const PlacementResult& result);

/// N,lambda,p_connect,shaping for N in [n_min, n_max].
std::string analyze_csv(const FieldSpec& field, long n_min, long n_max);

/// n,binomial,poisson for n = 0..N-1 at a fixed N.
std::string coverage_csv(const FieldSpec& field, long n_nodes);

/// strategy,trial,no_isolated,min_pairwise_m
std::string compare_csv(const ComparisonReport& report);

nlohmann::json mc_report_to_json(const McReport& report);

/// Writes to `path` + ".tmp" and renames over `path`.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace gowsn
