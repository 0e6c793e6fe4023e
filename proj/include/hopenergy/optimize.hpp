#pragma once

#include <vector>

#include "hopenergy/energy.hpp"

namespace hopenergy {

enum class Objective { kSumEnergy, kComputationEnergy };

// How the burst factor is chosen for each candidate relay count.
enum class BurstMode {
  kCompOpt,  // computation-optimal closed form, independent of N
  kSumOpt,   // golden-section search of the sum energy
};

inline constexpr int kDefaultMaxRelays = 64;

struct OptimizationResult {
  int best_n = 0;
  double best_delta_t = 1.0;
  EnergyBreakdown breakdown;
  int candidates_examined = 0;
};

struct TradeoffPoint {
  int relay_count = 0;
  double e_tx_norm = 0.0;
  double e_c_norm = 0.0;
};

// Burst factor minimizing the computation energy: min(c2 ln(c3) R, 1) for
// the exponential model (min(ln2 R, 1) with default constants). The linear
// model's computation energy does not depend on delta_t, so it is 1 there.
BurstFactor optimal_burst_factor_comp(
    double reference_rate,
    const ComplexityModel& model = ExponentialComplexity{});

// Minimizes the sum energy over [optimal_burst_factor_comp, 1].
BurstFactor optimal_burst_factor_sum(int relay_count,
                                     const ScenarioParams& params);

inline constexpr double kBurstSearchTolerance = 1e-6;

double objective_value(int relay_count, BurstFactor burst,
                       const ScenarioParams& params, Objective objective);

// Exhaustive argmin over {step, 2 step, ..., 1}. Grid points whose energy
// overflows are skipped. Ties resolve to the smaller delta_t.
BurstFactor brute_force_delta_oracle(
    int relay_count, const ScenarioParams& params, double grid_step,
    Objective objective = Objective::kSumEnergy);

// Exhaustive minimization of the sum energy over N in [0, n_max]; ties go
// to the smaller N.
OptimizationResult optimal_relay_count(const ScenarioParams& params,
                                       int n_max = kDefaultMaxRelays,
                                       BurstMode mode = BurstMode::kCompOpt);

// One (E_tx, E_c) point per relay count in [n_first, n_last] at the
// computation-optimal burst factor.
std::vector<TradeoffPoint> tradeoff_curve(const ScenarioParams& params,
                                          int n_first, int n_last);

}  // namespace hopenergy
