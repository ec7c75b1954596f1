#include "gowsn/analytics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gowsn/error.hpp"

namespace gowsn {
namespace {

using std::numbers::pi;

//---------------------------------------------------------------------------//
// Saddle-point evaluation of binomial and Poisson masses (C. Loader, "Fast
// and accurate computation of binomial probabilities", 2000). Works on the
// log scale through the Stirling remainder and the deviance term bd0, which
// keeps full relative precision where a plain lgamma difference of large
// arguments loses several digits.
//---------------------------------------------------------------------------//

// log(n!) - log(sqrt(2 pi n) (n/e)^n) for n = 1..15, to 22 digits.
constexpr std::array<double, 16> kStirlingError = {
    0.0,
    0.08106146679532725821967,
    0.04134069595540929409382,
    0.02767792568499833914879,
    0.02079067210376509311152,
    0.01664469118982119216319,
    0.01387612882307074799875,
    0.01189670994589177009506,
    0.01041126526197209649748,
    0.009255462182712732917729,
    0.008330563433362871256469,
    0.007573675487951840794972,
    0.006942840107209529865664,
    0.00640899418800420706844,
    0.005951370112758847735624,
    0.005554733551962801371039,
};

double stirling_error(long n)
{
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    if (n < static_cast<long>(kStirlingError.size()))
        return kStirlingError[static_cast<std::size_t>(n)];
    double const x = static_cast<double>(n);
    double const xx = x * x;
    if (n > 500)
        return (s0 - s1 / xx) / x;
    if (n > 80)
        return (s0 - (s1 - s2 / xx) / xx) / x;
    if (n > 35)
        return (s0 - (s1 - (s2 - s3 / xx) / xx) / xx) / x;
    return (s0 - (s1 - (s2 - (s3 - s4 / xx) / xx) / xx) / xx) / x;
}

// Deviance x log(x / np) + np - x, with a series near x = np.
double deviance(double x, double np)
{
    if (std::abs(x - np) < 0.1 * (x + np)) {
        double v = (x - np) / (x + np);
        double sum = (x - np) * v;
        double ej = 2.0 * x * v;
        v *= v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v;
            double const next = sum + ej / (2 * j + 1);
            if (next == sum)
                return next;
            sum = next;
        }
        return sum;
    }
    return x * std::log(x / np) + np - x;
}

// P(X = x) for X ~ Binomial(n, p), q = 1 - p.
double binomial_mass(long x, long n, double p, double q)
{
    if (n == 0)
        return x == 0 ? 1.0 : 0.0;
    double const dn = static_cast<double>(n);
    if (x == 0) {
        double const lc = p < 0.1 ? -deviance(dn, dn * q) - dn * p : dn * std::log(q);
        return std::exp(lc);
    }
    if (x == n) {
        double const lc = q < 0.1 ? -deviance(dn, dn * p) - dn * q : dn * std::log(p);
        return std::exp(lc);
    }
    double const dx = static_cast<double>(x);
    double const lc = stirling_error(n) - stirling_error(x) - stirling_error(n - x)
                      - deviance(dx, dn * p) - deviance(dn - dx, dn * q);
    double const lf = std::log(2.0 * pi) + std::log(dx) + std::log1p(-dx / dn);
    return std::exp(lc - 0.5 * lf);
}

double poisson_mass(long x, double lambda)
{
    if (lambda == 0.0)
        return x == 0 ? 1.0 : 0.0;
    if (x == 0)
        return std::exp(-lambda);
    double const dx = static_cast<double>(x);
    return std::exp(-stirling_error(x) - deviance(dx, lambda)) / std::sqrt(2.0 * pi * dx);
}

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

// log(1 - e^-a) for a > 0 without cancellation at either end.
double log1m_exp(double a)
{
    return a > std::numbers::ln2 ? std::log1p(-std::exp(-a)) : std::log(-std::expm1(-a));
}

}  // namespace

double density(const DensityParams& params)
{
    if (params.n_nodes < 0)
        throw Error(ErrorCode::InvalidParams, "n_nodes must be non-negative");
    if (!(params.range_m > 0.0) || !std::isfinite(params.range_m))
        throw Error(ErrorCode::InvalidParams, "range_m must be positive");
    if (!(params.area_m2 > 0.0) || !std::isfinite(params.area_m2))
        throw Error(ErrorCode::InvalidParams, "area_m2 must be positive");
    return static_cast<double>(params.n_nodes) * pi * params.range_m * params.range_m / params.area_m2;
}

double connectivity_probability(double lambda, long n_nodes)
{
    if (!(lambda >= 0.0) || std::isnan(lambda))
        throw Error(ErrorCode::InvalidParams, "lambda must be non-negative");
    if (n_nodes < 1)
        throw Error(ErrorCode::InvalidParams, "n_nodes must be at least 1");
    if (lambda == 0.0)
        return 0.0;
    if (std::isinf(lambda))
        return 1.0;
    return clamp_probability(std::exp(static_cast<double>(n_nodes) * log1m_exp(lambda)));
}

double connectivity_at(const FieldSpec& field, long n_nodes)
{
    return connectivity_probability(density({n_nodes, field.range_m(), field.area()}), n_nodes);
}

double p_r(double range_m, double side_m)
{
    if (!(range_m > 0.0) || !(side_m > 0.0) || !std::isfinite(range_m) || !std::isfinite(side_m))
        throw Error(ErrorCode::InvalidParams, "range_m and side_m must be positive");
    double const disc = pi * range_m * range_m;
    double const square = side_m * side_m;
    if (disc >= square)
        throw Error(ErrorCode::DiscExceedsField, "pi*range_m^2 must be smaller than side_m^2");
    return disc / square;
}

double p_r(const FieldSpec& field)
{
    if (!field.is_square())
        throw Error(ErrorCode::NonSquareField, "coverage model requires length_m == width_m");
    return p_r(field.range_m(), field.length_m());
}

CoverageModel::CoverageModel(long n_nodes, double range_m, double side_m)
    : n_nodes_(n_nodes), range_m_(range_m), side_m_(side_m), p_r_(gowsn::p_r(range_m, side_m))
{
    if (n_nodes < 1)
        throw Error(ErrorCode::InvalidParams, "n_nodes must be at least 1");
    lambda_s_ = static_cast<double>(n_nodes - 1) * p_r_;
}

CoverageModel CoverageModel::from_field(const FieldSpec& field, long n_nodes)
{
    if (!field.is_square())
        throw Error(ErrorCode::NonSquareField, "coverage model requires length_m == width_m");
    return CoverageModel(n_nodes, field.range_m(), field.length_m());
}

double coverage_binomial(long n, const CoverageModel& model)
{
    long const trials = model.n_nodes() - 1;
    if (n < 0 || n > trials)
        throw Error(ErrorCode::NOutOfRange,
                    "n = " + std::to_string(n) + " outside [0, " + std::to_string(trials) + "]");
    double const p = model.p_r();
    return clamp_probability(binomial_mass(n, trials, p, 1.0 - p));
}

double coverage_poisson(long n, double lambda_s)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidParams, "n must be non-negative");
    if (!(lambda_s >= 0.0) || !std::isfinite(lambda_s))
        throw Error(ErrorCode::InvalidParams, "lambda_s must be non-negative and finite");
    return clamp_probability(poisson_mass(n, lambda_s));
}

std::vector<double> binomial_distribution(const CoverageModel& model)
{
    std::vector<double> result(static_cast<std::size_t>(model.n_nodes()));
    for (long n = 0; n < model.n_nodes(); ++n)
        result[static_cast<std::size_t>(n)] = coverage_binomial(n, model);
    return result;
}

std::vector<double> poisson_distribution(double lambda_s, long upper)
{
    if (upper < 0)
        throw Error(ErrorCode::InvalidParams, "upper must be non-negative");
    std::vector<double> result(static_cast<std::size_t>(upper) + 1);
    for (long n = 0; n <= upper; ++n)
        result[static_cast<std::size_t>(n)] = coverage_poisson(n, lambda_s);
    return result;
}

long poisson_truncation(double lambda_s)
{
    return static_cast<long>(std::ceil(lambda_s + 12.0 * std::sqrt(lambda_s + 1.0)));
}

double tv_distance(std::span<const double> a, std::span<const double> b)
{
    auto check = [](std::span<const double> dist) {
        for (double v : dist) {
            if (!(v >= 0.0))
                throw Error(ErrorCode::NegativeMass, "distribution has a negative or NaN entry");
        }
    };
    check(a);
    check(b);
    std::size_t const n = std::max(a.size(), b.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double const av = i < a.size() ? a[i] : 0.0;
        double const bv = i < b.size() ? b[i] : 0.0;
        sum += std::abs(av - bv);
    }
    return 0.5 * sum;
}

double shaping(long n_nodes, double range_m, double side_m)
{
    CoverageModel const model(n_nodes, range_m, side_m);
    return clamp_probability(-std::expm1(-model.lambda_s()));
}

double StoppingRule::target() const
{
    if (!(threshold > 0.0 && threshold < 1.0))
        throw Error(ErrorCode::InvalidParams, "stopping threshold must lie in (0, 1)");
    return kind == Kind::PaperLiteral ? threshold : 1.0 - threshold;
}

long default_stopping_cap(const FieldSpec& field)
{
    double const cap = 10.0 * field.area() / (pi * field.range_m() * field.range_m());
    return std::max(1L, static_cast<long>(std::ceil(cap)));
}

long stopping_n(const FieldSpec& field, const StoppingRule& rule, long cap)
{
    if (cap <= 0)
        cap = default_stopping_cap(field);
    double const target = rule.target();
    for (long n = 1; n <= cap; ++n) {
        if (connectivity_at(field, n) >= target)
            return n;
    }
    throw Error(ErrorCode::NoSolutionWithinBound,
                "no N <= " + std::to_string(cap) + " reaches p >= " + std::to_string(target));
}

}  // namespace gowsn
