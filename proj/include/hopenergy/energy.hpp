#pragma once

#include <variant>

#include "hopenergy/power_alloc.hpp"

namespace hopenergy {

// Decoder energy per symbol grows as c1 * c3^(c2 * rate) (trellis-like codes).
struct ExponentialComplexity {
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 2.0;
};

// Uncoded transmission: decoder energy linear in the rate, paid for with an
// SNR gap on the transmit side.
struct LinearComplexity {
  double snr_gap_db = 5.0;

  double gap_factor() const;
};

using ComplexityModel = std::variant<ExponentialComplexity, LinearComplexity>;

void validate(const ComplexityModel& model);
bool is_linear(const ComplexityModel& model);

enum class NetworkKind { kWireless, kFixed };

// delta_t = T' / T_ref in (0, 1].
class BurstFactor {
 public:
  explicit BurstFactor(double delta_t);

  double value() const { return delta_t_; }
  double inverse() const { return 1.0 / delta_t_; }

  friend bool operator==(const BurstFactor&, const BurstFactor&) = default;

 private:
  double delta_t_;
};

struct EnergyBreakdown {
  double e_tx_norm = 0.0;
  double e_c_norm = 0.0;
  double e_sum_norm = 0.0;
  double delta_t = 1.0;
  int relay_count = 0;
  double eta = 0.0;
};

// Everything that defines a scenario except the relay count and burst factor.
// eta1 is eta_ref(1) on a linear scale.
struct ScenarioParams {
  double reference_rate = 1.0;
  double alpha = 3.0;
  double noise_power = 1.0;
  double eta1 = 1.0;
  ComplexityModel model = ExponentialComplexity{};
  NetworkKind network = NetworkKind::kWireless;

  double reference_power() const;
};

// Power needed to carry the same payload in delta_t of the slots:
// P' = sigma^2 ((1 + P/sigma^2)^(1/delta_t) - 1).
double bursty_power(double power, double noise_power, BurstFactor burst);

// Network transmit energy over the reference energy, using the actual
// per-node allocation.
double e_tx_norm_exact(const PowerAllocation& alloc, BurstFactor burst,
                       double reference_power, double noise_power);

// Closed form with every node at the source power (no cooperation gain).
double e_tx_norm_fixed(int relay_count, double alpha, BurstFactor burst,
                       double reference_power, double noise_power);

double e_c_norm(int relay_count, BurstFactor burst, double reference_rate,
                const ComplexityModel& model);

// Computation-to-transmission energy ratio of the single-hop reference at
// `reference_rate`, anchored at eta1 = eta_ref(1).
double eta_ref(double reference_rate, double eta1,
               const ComplexityModel& model);

double e_sum_norm(double e_c_norm, double e_tx_norm, double eta);

// Transmission energy of the multi-hop network for the scenario, including
// the SNR gap of the linear model.
double scenario_e_tx_norm(int relay_count, BurstFactor burst,
                          const ScenarioParams& params);

EnergyBreakdown evaluate_breakdown(int relay_count, BurstFactor burst,
                                   const ScenarioParams& params);

}  // namespace hopenergy
