#include "hopenergy/power_alloc.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hopenergy/errors.hpp"

namespace hopenergy {

namespace {

void check_params(int relay_count, double alpha, double reference_power) {
  if (relay_count < 0) throw DomainError("relay_count must be >= 0");
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("path loss exponent must be finite and > 0");
  }
  if (!std::isfinite(reference_power) || reference_power <= 0.0) {
    throw DomainError("reference power must be finite and > 0");
  }
}

}  // namespace

double PowerAllocation::total() const {
  return std::accumulate(powers.begin(), powers.end(), 0.0);
}

double source_power(int relay_count, double alpha, double reference_power) {
  check_params(relay_count, alpha, reference_power);
  return std::pow(static_cast<double>(relay_count + 1), -alpha) *
         reference_power;
}

std::vector<double> recursive_powers(double source, double alpha,
                                     std::size_t count) {
  std::vector<double> powers;
  powers.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    double p = source;
    for (std::size_t k = 0; k < n; ++k) {
      p -= std::pow(static_cast<double>(n + 1 - k), -alpha) * powers[k];
    }
    if (!(p >= 0.0)) {
      throw NumericalError("recursive allocation produced negative power at node " +
                           std::to_string(n));
    }
    powers.push_back(p);
  }
  return powers;
}

PowerAllocation recursive_allocation(int relay_count, double alpha,
                                     double reference_power) {
  const double p0 = source_power(relay_count, alpha, reference_power);
  return {recursive_powers(p0, alpha, static_cast<std::size_t>(relay_count) + 1),
          AllocationKind::kRecursive};
}

PowerAllocation equal_allocation(int relay_count, double alpha,
                                 double reference_power) {
  const double p0 = source_power(relay_count, alpha, reference_power);
  return {std::vector<double>(static_cast<std::size_t>(relay_count) + 1, p0),
          AllocationKind::kEqual};
}

double power_db(double linear) { return 10.0 * std::log10(linear); }

double df_end_to_end_rate(const NetworkTopology& topo,
                          const PowerAllocation& alloc) {
  return df_end_to_end_rate(topo, std::span<const double>(alloc.powers));
}

}  // namespace hopenergy
