#include "hopenergy/energy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hopenergy/errors.hpp"

namespace hopenergy {

namespace {

const double kLn2 = std::log(2.0);
const double kMaxLog = std::log(std::numeric_limits<double>::max());

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double exp_checked(double log_value, const char* what) {
  if (log_value > kMaxLog) {
    throw OverflowError(std::string(what) + ": result exceeds double range");
  }
  return std::exp(log_value);
}

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

double LinearComplexity::gap_factor() const {
  return std::pow(10.0, snr_gap_db / 10.0);
}

void validate(const ComplexityModel& model) {
  std::visit(Overloaded{
                 [](const ExponentialComplexity& m) {
                   if (!(m.c1 > 0.0) || !(m.c2 > 0.0) || !(m.c3 > 1.0) ||
                       !std::isfinite(m.c1) || !std::isfinite(m.c2) ||
                       !std::isfinite(m.c3)) {
                     throw DomainError(
                         "exponential complexity needs c1 > 0, c2 > 0, c3 > 1");
                   }
                 },
                 [](const LinearComplexity& m) {
                   if (!std::isfinite(m.snr_gap_db) || m.snr_gap_db < 0.0) {
                     throw DomainError("snr gap must be finite and >= 0 dB");
                   }
                 },
             },
             model);
}

bool is_linear(const ComplexityModel& model) {
  return std::holds_alternative<LinearComplexity>(model);
}

BurstFactor::BurstFactor(double delta_t) : delta_t_(delta_t) {
  if (!std::isfinite(delta_t) || delta_t <= 0.0 || delta_t > 1.0) {
    throw DomainError("burst factor must lie in (0, 1], got " +
                      std::to_string(delta_t));
  }
}

double ScenarioParams::reference_power() const {
  require_positive(reference_rate, "reference_rate");
  require_positive(noise_power, "noise_power");
  return noise_power * required_snr(reference_rate);
}

double bursty_power(double power, double noise_power, BurstFactor burst) {
  if (!std::isfinite(power) || power < 0.0) {
    throw DomainError("bursty_power: power must be finite and >= 0");
  }
  require_positive(noise_power, "noise_power");
  if (burst.value() == 1.0) return power;
  // (1+x)^(1/dt) - 1 evaluated as expm1(log1p(x)/dt).
  const double exponent = std::log1p(power / noise_power) * burst.inverse();
  if (exponent > kMaxLog) {
    throw OverflowError("bursty_power: result exceeds double range");
  }
  const double scaled = noise_power * std::expm1(exponent);
  if (!std::isfinite(scaled)) {
    throw OverflowError("bursty_power: result exceeds double range");
  }
  return scaled;
}

double e_tx_norm_exact(const PowerAllocation& alloc, BurstFactor burst,
                       double reference_power, double noise_power) {
  require_positive(reference_power, "reference_power");
  if (alloc.powers.empty()) throw DomainError("empty power allocation");
  double total = 0.0;
  for (double p : alloc.powers) total += bursty_power(p, noise_power, burst);
  const double energy = burst.value() * total / reference_power;
  if (!std::isfinite(energy)) {
    throw OverflowError("e_tx_norm_exact: result exceeds double range");
  }
  return energy;
}

double e_tx_norm_fixed(int relay_count, double alpha, BurstFactor burst,
                       double reference_power, double noise_power) {
  const double p0 = source_power(relay_count, alpha, reference_power);
  const double hops = static_cast<double>(relay_count + 1);
  const double energy = burst.value() * std::pow(hops, 1.0 - alpha) *
                        bursty_power(p0, noise_power, burst) / p0;
  if (!std::isfinite(energy)) {
    throw OverflowError("e_tx_norm_fixed: result exceeds double range");
  }
  return energy;
}

double e_c_norm(int relay_count, BurstFactor burst, double reference_rate,
                const ComplexityModel& model) {
  if (relay_count < 0) throw DomainError("relay_count must be >= 0");
  require_positive(reference_rate, "reference_rate");
  validate(model);
  const double hops = static_cast<double>(relay_count + 1);
  return std::visit(
      Overloaded{
          [&](const ExponentialComplexity& m) {
            // delta_t (N+1) c3^(c2 * delta_r), delta_r = R (1/delta_t - 1).
            const double rate_increase =
                reference_rate * (burst.inverse() - 1.0);
            const double log_energy = std::log(burst.value() * hops) +
                                      m.c2 * rate_increase * std::log(m.c3);
            return exp_checked(log_energy, "e_c_norm");
          },
          // delta_t (N+1) R'/R_ref with R'/R_ref = 1/delta_t.
          [&](const LinearComplexity&) { return hops; },
      },
      model);
}

double eta_ref(double reference_rate, double eta1,
               const ComplexityModel& model) {
  require_positive(reference_rate, "reference_rate");
  if (!std::isfinite(eta1) || eta1 < 0.0) {
    throw DomainError("eta1 must be finite and >= 0");
  }
  validate(model);
  if (eta1 == 0.0) return 0.0;
  // Transmit energy of the reference grows as 2^R - 1 relative to R = 1.
  const double log_tx_growth = std::log(std::expm1(reference_rate * kLn2));
  return std::visit(
      Overloaded{
          [&](const ExponentialComplexity& m) {
            const double log_c_growth =
                m.c2 * (reference_rate - 1.0) * std::log(m.c3);
            return exp_checked(std::log(eta1) + log_c_growth - log_tx_growth,
                               "eta_ref");
          },
          [&](const LinearComplexity&) {
            return exp_checked(
                std::log(eta1) + std::log(reference_rate) - log_tx_growth,
                "eta_ref");
          },
      },
      model);
}

double e_sum_norm(double e_c_norm, double e_tx_norm, double eta) {
  if (!(e_c_norm >= 0.0) || !(e_tx_norm >= 0.0) || !(eta >= 0.0) ||
      !std::isfinite(eta)) {
    throw DomainError("e_sum_norm: inputs must be >= 0 and eta finite");
  }
  return (e_c_norm * eta + e_tx_norm) / (1.0 + eta);
}

double scenario_e_tx_norm(int relay_count, BurstFactor burst,
                          const ScenarioParams& params) {
  const double p_ref = params.reference_power();
  double e_tx = 0.0;
  if (params.network == NetworkKind::kWireless) {
    e_tx = e_tx_norm_exact(
        recursive_allocation(relay_count, params.alpha, p_ref), burst, p_ref,
        params.noise_power);
  } else {
    e_tx = e_tx_norm_fixed(relay_count, params.alpha, burst, p_ref,
                           params.noise_power);
  }
  if (const auto* linear = std::get_if<LinearComplexity>(&params.model)) {
    e_tx *= linear->gap_factor();
  }
  return e_tx;
}

EnergyBreakdown evaluate_breakdown(int relay_count, BurstFactor burst,
                                   const ScenarioParams& params) {
  EnergyBreakdown out;
  out.relay_count = relay_count;
  out.delta_t = burst.value();
  out.e_tx_norm = scenario_e_tx_norm(relay_count, burst, params);
  out.e_c_norm =
      e_c_norm(relay_count, burst, params.reference_rate, params.model);
  out.eta = eta_ref(params.reference_rate, params.eta1, params.model);
  out.e_sum_norm = e_sum_norm(out.e_c_norm, out.e_tx_norm, out.eta);
  return out;
}

}  // namespace hopenergy
