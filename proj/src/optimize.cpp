#include "hopenergy/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hopenergy/errors.hpp"

namespace hopenergy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective at delta_t; +inf where the energy overflows.
double safe_objective(int relay_count, double delta_t,
                      const ScenarioParams& params, Objective objective) {
  try {
    return objective_value(relay_count, BurstFactor(delta_t), params,
                           objective);
  } catch (const OverflowError&) {
    return kInf;
  }
}

}  // namespace

BurstFactor optimal_burst_factor_comp(double reference_rate,
                                      const ComplexityModel& model) {
  if (!std::isfinite(reference_rate) || reference_rate <= 0.0) {
    throw DomainError("reference_rate must be finite and > 0");
  }
  validate(model);
  if (const auto* exp = std::get_if<ExponentialComplexity>(&model)) {
    return BurstFactor(
        std::min(exp->c2 * std::log(exp->c3) * reference_rate, 1.0));
  }
  return BurstFactor(1.0);
}

double objective_value(int relay_count, BurstFactor burst,
                       const ScenarioParams& params, Objective objective) {
  if (objective == Objective::kComputationEnergy) {
    return e_c_norm(relay_count, burst, params.reference_rate, params.model);
  }
  return evaluate_breakdown(relay_count, burst, params).e_sum_norm;
}

BurstFactor optimal_burst_factor_sum(int relay_count,
                                     const ScenarioParams& params) {
  const double lower = optimal_burst_factor_comp(params.reference_rate,
                                                 params.model)
                           .value();
  const double upper = 1.0;
  auto f = [&](double dt) {
    return safe_objective(relay_count, dt, params, Objective::kSumEnergy);
  };
  if (upper - lower <= kBurstSearchTolerance) return BurstFactor(upper);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lower;
  double b = upper;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kBurstSearchTolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double best = 0.5 * (a + b);
  double best_value = f(best);
  // The interval ends are candidates too: the optimum sits on a boundary
  // whenever one energy term dominates.
  for (double edge : {lower, upper}) {
    const double value = f(edge);
    if (value < best_value) {
      best = edge;
      best_value = value;
    }
  }
  return BurstFactor(std::clamp(best, lower, upper));
}

BurstFactor brute_force_delta_oracle(int relay_count,
                                     const ScenarioParams& params,
                                     double grid_step, Objective objective) {
  if (!(grid_step > 0.0) || grid_step > 0.01) {
    throw DomainError("grid_step must lie in (0, 0.01]");
  }
  const auto steps = static_cast<long>(std::floor(1.0 / grid_step + 1e-9));
  double best = 1.0;
  double best_value = kInf;
  for (long k = 1; k <= steps + 1; ++k) {
    const double dt = std::min(static_cast<double>(k) * grid_step, 1.0);
    const double value = safe_objective(relay_count, dt, params, objective);
    if (value < best_value) {
      best = dt;
      best_value = value;
    }
    if (dt == 1.0) break;
  }
  return BurstFactor(best);
}

OptimizationResult optimal_relay_count(const ScenarioParams& params,
                                       int n_max, BurstMode mode) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  OptimizationResult result;
  result.breakdown.e_sum_norm = kInf;
  const BurstFactor comp_opt =
      optimal_burst_factor_comp(params.reference_rate, params.model);
  for (int n = 0; n <= n_max; ++n) {
    ++result.candidates_examined;
    const BurstFactor burst = mode == BurstMode::kCompOpt
                                  ? comp_opt
                                  : optimal_burst_factor_sum(n, params);
    EnergyBreakdown candidate;
    try {
      candidate = evaluate_breakdown(n, burst, params);
    } catch (const OverflowError&) {
      continue;
    }
    if (candidate.e_sum_norm < result.breakdown.e_sum_norm) {
      result.best_n = n;
      result.best_delta_t = burst.value();
      result.breakdown = candidate;
    }
  }
  if (!std::isfinite(result.breakdown.e_sum_norm)) {
    throw OverflowError("optimal_relay_count: every candidate overflowed");
  }
  return result;
}

std::vector<TradeoffPoint> tradeoff_curve(const ScenarioParams& params,
                                          int n_first, int n_last) {
  if (n_first < 0 || n_last < n_first) {
    throw DomainError("tradeoff_curve: relay range must be non-empty and >= 0");
  }
  const BurstFactor burst =
      optimal_burst_factor_comp(params.reference_rate, params.model);
  std::vector<TradeoffPoint> points;
  points.reserve(static_cast<std::size_t>(n_last - n_first + 1));
  for (int n = n_first; n <= n_last; ++n) {
    points.push_back({n, scenario_e_tx_norm(n, burst, params),
                      e_c_norm(n, burst, params.reference_rate, params.model)});
  }
  return points;
}

}  // namespace hopenergy
