#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gowsn/field_model.hpp"

namespace gowsn {

// Closed-form density and coverage model for a uniformly deployed network.
//
// Symbols: N nodes, range R, field area A, square side L.
//   density            lambda = N pi R^2 / A
//   connectivity       p      = (1 - e^-lambda)^N
//   disc probability   P_R    = pi R^2 / L^2
//   coverage count     Binomial(N - 1, P_R), Poisson limit with rate
//                      lambda_s = (N - 1) P_R

struct DensityParams {
    long n_nodes = 0;
    double range_m = 0.0;
    double area_m2 = 0.0;
};

/// Average number of neighbors per node. Throws InvalidParams.
double density(const DensityParams& params);

/// Probability that no node is isolated, (1 - e^-lambda)^N, evaluated as
/// exp(N log(1 - e^-lambda)). Zero when lambda is zero. Throws InvalidParams.
double connectivity_probability(double lambda, long n_nodes);

/// Connectivity probability of N nodes on `field` (density over the full area).
double connectivity_at(const FieldSpec& field, long n_nodes);

/// Probability that one uniformly placed disc covers a uniform test point.
/// Throws DiscExceedsField when pi R^2 >= L^2.
double p_r(double range_m, double side_m);

/// As above for a field; throws NonSquareField unless length == width.
double p_r(const FieldSpec& field);

class CoverageModel {
public:
    /// Throws InvalidParams for n_nodes < 1, DiscExceedsField as p_r.
    CoverageModel(long n_nodes, double range_m, double side_m);
    static CoverageModel from_field(const FieldSpec& field, long n_nodes);

    long n_nodes() const noexcept { return n_nodes_; }
    double range_m() const noexcept { return range_m_; }
    double side_m() const noexcept { return side_m_; }
    double p_r() const noexcept { return p_r_; }
    /// Mean coverage count of a test point, (N - 1) P_R.
    double lambda_s() const noexcept { return lambda_s_; }

private:
    long n_nodes_;
    double range_m_;
    double side_m_;
    double p_r_;
    double lambda_s_;
};

/// Probability that a test point lies within range of exactly n of the other
/// N - 1 nodes. Throws NOutOfRange unless 0 <= n <= N - 1.
double coverage_binomial(long n, const CoverageModel& model);

/// Poisson limit e^-lambda_s lambda_s^n / n!. Throws InvalidParams.
double coverage_poisson(long n, double lambda_s);

/// Full distributions: binomial over n = 0..N-1, Poisson over n = 0..upper.
std::vector<double> binomial_distribution(const CoverageModel& model);
std::vector<double> poisson_distribution(double lambda_s, long upper);

/// Upper index that captures all but ~1e-9 of the Poisson mass:
/// ceil(lambda_s + 12 sqrt(lambda_s + 1)).
long poisson_truncation(double lambda_s);

/// Half the L1 distance between two mass sequences, zero-padding the shorter.
/// Throws NegativeMass.
double tv_distance(std::span<const double> a, std::span<const double> b);

/// Fraction of the field covered by at least one node, 1 - e^-lambda_s.
/// Strictly increasing in N with limit 1.
double shaping(long n_nodes, double range_m, double side_m);

struct StoppingRule {
    enum class Kind {
        PaperLiteral,    ///< stop once p >= threshold
        ErrorComplement, ///< stop once p >= 1 - threshold
    };

    Kind kind = Kind::ErrorComplement;
    double threshold = 0.1;

    /// The value p must reach. Throws InvalidParams unless threshold in (0, 1).
    double target() const;
    bool satisfied(double p) const { return p >= target(); }

    static StoppingRule paper_literal(double theta) { return {Kind::PaperLiteral, theta}; }
    static StoppingRule error_complement(double eps) { return {Kind::ErrorComplement, eps}; }
};

/// Default search cap, 10 A / (pi R^2).
long default_stopping_cap(const FieldSpec& field);

/// Smallest N >= 1 whose connectivity probability on `field` satisfies `rule`.
/// Throws NoSolutionWithinBound past `cap` (default_stopping_cap if <= 0).
long stopping_n(const FieldSpec& field, const StoppingRule& rule, long cap = 0);

}  // namespace gowsn
