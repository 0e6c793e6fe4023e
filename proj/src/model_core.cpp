#include "hopenergy/model_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "hopenergy/errors.hpp"

namespace hopenergy {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(name) + " must be finite and > 0");
  }
}

void require_node(int n, const NetworkTopology& topo) {
  if (n < 0 || n > topo.destination()) {
    throw DomainError("node index " + std::to_string(n) + " outside [0, " +
                      std::to_string(topo.destination()) + "]");
  }
}

}  // namespace

NetworkTopology::NetworkTopology(int relay_count, double path_loss_exponent,
                                 double noise_power,
                                 double source_dest_distance)
    : relay_count_(relay_count),
      path_loss_exponent_(path_loss_exponent),
      noise_power_(noise_power),
      source_dest_distance_(source_dest_distance) {
  if (relay_count < 0) throw DomainError("relay_count must be >= 0");
  require_positive(path_loss_exponent, "path_loss_exponent");
  require_positive(noise_power, "noise_power");
  require_positive(source_dest_distance, "source_dest_distance");
}

ReferenceSystem::ReferenceSystem(double reference_power, double slot_count,
                                 double noise_power)
    : reference_power_(reference_power),
      slot_count_(slot_count),
      noise_power_(noise_power) {
  require_positive(reference_power, "reference_power");
  require_positive(slot_count, "slot_count");
  require_positive(noise_power, "noise_power");
  reference_rate_ = capacity(reference_power / noise_power);
}

ReferenceSystem ReferenceSystem::FromRate(double rate, double slot_count,
                                          double noise_power) {
  require_positive(rate, "reference_rate");
  require_positive(noise_power, "noise_power");
  return ReferenceSystem(noise_power * required_snr(rate), slot_count,
                         noise_power);
}

double capacity(double snr) {
  if (!std::isfinite(snr) || snr < 0.0) {
    throw DomainError("capacity: snr must be finite and >= 0");
  }
  return std::log1p(snr) / std::log(2.0);
}

double required_snr(double rate) {
  if (!std::isfinite(rate) || rate < 0.0) {
    throw DomainError("required_snr: rate must be finite and >= 0");
  }
  double snr = std::expm1(rate * std::log(2.0));
  if (!std::isfinite(snr)) throw OverflowError("required_snr: 2^rate overflows");
  return snr;
}

double node_distance(int n, int n2, const NetworkTopology& topo) {
  require_node(n, topo);
  require_node(n2, topo);
  return static_cast<double>(std::abs(n2 - n)) /
         static_cast<double>(topo.relay_count() + 1) *
         topo.source_dest_distance();
}

double channel_power_gain(int n, int n2, const NetworkTopology& topo) {
  if (n == n2) throw DomainError("channel_power_gain: n == n2 (zero distance)");
  return std::pow(node_distance(n, n2, topo), -topo.path_loss_exponent());
}

double df_end_to_end_rate(const NetworkTopology& topo,
                          std::span<const double> powers) {
  const int transmitters = topo.relay_count() + 1;
  if (static_cast<int>(powers.size()) != transmitters) {
    throw DomainError("df_end_to_end_rate: expected " +
                      std::to_string(transmitters) + " powers, got " +
                      std::to_string(powers.size()));
  }
  for (double p : powers) {
    if (!std::isfinite(p) || p < 0.0) {
      throw DomainError("df_end_to_end_rate: powers must be finite and >= 0");
    }
  }
  double rate = std::numeric_limits<double>::infinity();
  for (int receiver = 1; receiver <= topo.destination(); ++receiver) {
    double received = 0.0;
    for (int k = 0; k < receiver; ++k) {
      received += channel_power_gain(receiver, k, topo) * powers[k];
    }
    rate = std::min(rate, capacity(received / topo.noise_power()));
  }
  return rate;
}

}  // namespace hopenergy
