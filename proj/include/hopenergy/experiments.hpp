#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopenergy/optimize.hpp"

namespace hopenergy {

using FieldValue = std::variant<std::int64_t, double, bool, std::string>;

struct Field {
  std::string name;
  FieldValue value;

  friend bool operator==(const Field&, const Field&) = default;
};

// One row of a sweep. `keys` are the parameters that vary between series,
// `independent` the swept variable, `parameters` the fixed settings echoed so
// each row can be recomputed on its own.
struct SweepRecord {
  std::string scenario_id;
  std::vector<Field> keys;
  Field independent;
  std::vector<Field> outputs;
  std::vector<Field> parameters;

  // keys, independent, outputs
  std::vector<Field> table_fields() const;
  // table_fields followed by parameters
  std::vector<Field> all_fields() const;
  const FieldValue* find(std::string_view name) const;
  double number(std::string_view name) const;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// Plotted value beyond which the figures clip their curves.
inline constexpr double kPaperPlotCeiling = 10.0;

// start, start + step, ... while <= 1.
std::vector<double> delta_grid(double start, double step);

// Fig. 6 rate axis: 0.0001, 0.5, 1, ..., 7.
std::vector<double> reference_rate_grid();

std::string model_name(const ComplexityModel& model);
std::string network_name(NetworkKind kind);

// Recursive power assignment in dB for nodes 0..divisor, with source power
// divisor^-alpha P_ref.
std::vector<SweepRecord> reproduce_fig2(const std::vector<double>& alphas,
                                        int divisor, double reference_power);

// Exact and fixed-network transmission energy plus computation energy per
// (N, delta_t). Overflowing values are NaN with overflow = true.
std::vector<SweepRecord> reproduce_fig3_fig4(
    const std::vector<int>& relay_counts, double reference_rate, double alpha,
    const std::vector<double>& delta_ts,
    const ComplexityModel& model = ExponentialComplexity{});

// Tradeoff curves for wireless and fixed networks per reference rate.
std::vector<SweepRecord> reproduce_fig5(const std::vector<double>& rates,
                                        int n_first, int n_last, double alpha,
                                        const ComplexityModel& model =
                                            ExponentialComplexity{});

struct Fig6Config {
  std::vector<double> eta1_db = {0.0, -10.0, -20.0};
  std::vector<double> rates = reference_rate_grid();
  std::vector<ComplexityModel> models = {ExponentialComplexity{},
                                         LinearComplexity{}};
  std::vector<NetworkKind> networks = {NetworkKind::kWireless,
                                       NetworkKind::kFixed};
  double alpha = 3.0;
  double noise_power = 1.0;
  int n_max = kDefaultMaxRelays;
  BurstMode burst_mode = BurstMode::kCompOpt;
};

// Optimal relay count and minimum sum energy per (eta1, model, network, R).
std::vector<SweepRecord> reproduce_fig6(const Fig6Config& config);

// evaluate_breakdown over every (N, delta_t) pair.
std::vector<SweepRecord> energy_sweep(const ScenarioParams& params,
                                      const std::vector<int>& relay_counts,
                                      const std::vector<double>& delta_ts);

std::vector<SweepRecord> power_assignment(int relay_count, double alpha,
                                          double reference_power,
                                          AllocationKind kind);

std::vector<SweepRecord> tradeoff_records(const ScenarioParams& params,
                                          int n_first, int n_last);

SweepRecord optimization_record(const ScenarioParams& params, int n_max,
                                BurstMode mode);

}  // namespace hopenergy
