#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gowsn/config.hpp"
#include "gowsn/montecarlo.hpp"

namespace gowsn {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitBoardExhausted = 2,
    kExitEnvelopeBreach = 3,
};

/// Test hook for the validation command.
struct ValidationHooks {
    /// Added to the analytic reference of the no-isolated-node check.
    double reference_bias = 0.0;
};

struct ValidationCheck {
    std::string name;
    double value = 0.0;
    double envelope = 0.0;
    bool pass = false;
};

struct ValidationReport {
    McReport eq2;
    std::optional<McReport> eq2_planar;  // edge-effect comparison, not checked
    McReport two_node;
    double eq4_tv = 0.0;
    double eq6_tv = 0.0;
    double binomial_poisson_tv = 0.0;
    std::vector<ValidationCheck> checks;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Envelope on the TV distance between an empirical histogram of `samples`
/// points and `reference`: max(floor, 3 x the expected sampling TV).
double tv_envelope(std::span<const double> reference, double samples, double floor = 0.02);

/// Runs every Monte Carlo check against the closed forms. Requires a square field.
ValidationReport run_validation(const RunConfig& cfg, const ValidationHooks& hooks = {});

/// Entry point behind the `gowsn` binary. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const ValidationHooks& hooks = {});

}  // namespace gowsn
