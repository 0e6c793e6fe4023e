#pragma once

#include <span>

namespace hopenergy {

// Line network: source 0, relays 1..N, destination N+1, equally spaced
// between source and destination.
class NetworkTopology {
 public:
  NetworkTopology(int relay_count, double path_loss_exponent,
                  double noise_power = 1.0, double source_dest_distance = 1.0);

  int relay_count() const { return relay_count_; }
  double path_loss_exponent() const { return path_loss_exponent_; }
  double noise_power() const { return noise_power_; }
  double source_dest_distance() const { return source_dest_distance_; }

  int source() const { return 0; }
  int destination() const { return relay_count_ + 1; }

 private:
  int relay_count_;
  double path_loss_exponent_;
  double noise_power_;
  double source_dest_distance_;
};

// Single-hop baseline. The rate is always derived from the power, so the two
// can never disagree.
class ReferenceSystem {
 public:
  ReferenceSystem(double reference_power, double slot_count = 1.0,
                  double noise_power = 1.0);

  // Builds the reference system that carries `rate` bits/symbol,
  // i.e. P_ref = sigma^2 (2^rate - 1).
  static ReferenceSystem FromRate(double rate, double slot_count = 1.0,
                                  double noise_power = 1.0);

  double reference_power() const { return reference_power_; }
  double slot_count() const { return slot_count_; }
  double noise_power() const { return noise_power_; }
  double reference_rate() const { return reference_rate_; }
  double payload_bits() const { return reference_rate_ * slot_count_; }

 private:
  double reference_power_;
  double slot_count_;
  double noise_power_;
  double reference_rate_;
};

// C(x) = log2(1 + x).
double capacity(double snr);

// Inverse of capacity: the SNR needed for `rate` bits/symbol.
double required_snr(double rate);

double node_distance(int n, int n2, const NetworkTopology& topo);

// Power gain h^2 = d^-alpha between two distinct nodes.
double channel_power_gain(int n, int n2, const NetworkTopology& topo);

// Cooperative decode-and-forward rate: min over receivers n = 1..N+1 of
// C(sum_{k<n} h^2_{n,k} P_k / sigma^2). `powers` holds P_0..P_N.
double df_end_to_end_rate(const NetworkTopology& topo,
                          std::span<const double> powers);

}  // namespace hopenergy
