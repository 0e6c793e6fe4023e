#pragma once

#include <cstddef>
#include <vector>

#include "hopenergy/model_core.hpp"

namespace hopenergy {

enum class AllocationKind { kRecursive, kEqual };

// Transmit powers P_0..P_N (linear) for a network with N relays.
struct PowerAllocation {
  std::vector<double> powers;
  AllocationKind kind = AllocationKind::kRecursive;

  int relay_count() const { return static_cast<int>(powers.size()) - 1; }
  double source() const { return powers.front(); }
  double total() const;
};

// P_0 = (N+1)^-alpha P_ref: the source power that gives the first hop the
// reference rate.
double source_power(int relay_count, double alpha, double reference_power);

// Cooperative power recursion P_n = P_0 - sum_{k<n} (n+1-k)^-alpha P_k,
// which keeps every receiver at the first-hop rate.
PowerAllocation recursive_allocation(int relay_count, double alpha,
                                     double reference_power);

// Same recursion started from an arbitrary source power and continued for
// `count` entries (count may exceed N+1, e.g. to plot a longer sequence).
std::vector<double> recursive_powers(double source, double alpha,
                                     std::size_t count);

PowerAllocation equal_allocation(int relay_count, double alpha,
                                 double reference_power);

double power_db(double linear);

double df_end_to_end_rate(const NetworkTopology& topo,
                          const PowerAllocation& alloc);

}  // namespace hopenergy
