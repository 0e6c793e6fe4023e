#include "hopenergy/model_core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hopenergy/errors.hpp"
#include "oracles.hpp"

namespace hopenergy {
namespace {

TEST(Capacity, KnownValues) {
  EXPECT_DOUBLE_EQ(capacity(1.0), 1.0);
  EXPECT_DOUBLE_EQ(capacity(0.0), 0.0);
  EXPECT_DOUBLE_EQ(capacity(3.0), 2.0);
}

TEST(Capacity, RejectsNegativeAndNonFinite) {
  EXPECT_THROW(capacity(-1e-9), DomainError);
  EXPECT_THROW(capacity(std::nan("")), DomainError);
  EXPECT_THROW(capacity(INFINITY), DomainError);
}

TEST(Capacity, ConcaveAndIncreasing) {
  const double h = 1e-3;
  for (double x = 0.01; x < 50.0; x *= 1.3) {
    EXPECT_GT(capacity(x + h), capacity(x));
    const double second =
        (capacity(x + h) - 2.0 * capacity(x) + capacity(x - h)) / (h * h);
    EXPECT_LE(second, 1e-6) << "x=" << x;
  }
}

TEST(Capacity, RequiredSnrInverts) {
  for (double r : {0.0001, 0.1, 1.0, 2.5, 7.0}) {
    EXPECT_NEAR(capacity(required_snr(r)), r, 1e-12 * std::max(1.0, r));
  }
}

TEST(ReferenceSystem, RateFollowsPower) {
  const ReferenceSystem ref(1.0, 100.0);
  EXPECT_DOUBLE_EQ(ref.reference_rate(), 1.0);
  EXPECT_DOUBLE_EQ(ref.payload_bits(), 100.0);
  const auto from_rate = ReferenceSystem::FromRate(2.0);
  EXPECT_DOUBLE_EQ(from_rate.reference_power(), 3.0);
  EXPECT_EQ(from_rate.reference_rate(),
            std::log1p(from_rate.reference_power()) / std::log(2.0));
  EXPECT_THROW(ReferenceSystem(0.0), DomainError);
  EXPECT_THROW(ReferenceSystem(1.0, -1.0), DomainError);
}

TEST(NetworkTopology, Validation) {
  EXPECT_THROW(NetworkTopology(-1, 3.0), DomainError);
  EXPECT_THROW(NetworkTopology(1, 0.0), DomainError);
  EXPECT_THROW(NetworkTopology(1, 3.0, 0.0), DomainError);
  EXPECT_THROW(NetworkTopology(1, 3.0, 1.0, -2.0), DomainError);
  const NetworkTopology topo(3, 3.0);
  EXPECT_EQ(topo.source(), 0);
  EXPECT_EQ(topo.destination(), 4);
}

TEST(NodeDistance, EqualSpacing) {
  EXPECT_DOUBLE_EQ(node_distance(0, 1, NetworkTopology(1, 3.0)), 0.5);
  EXPECT_DOUBLE_EQ(node_distance(0, 1, NetworkTopology(0, 3.0)), 1.0);
  EXPECT_DOUBLE_EQ(node_distance(2, 5, NetworkTopology(4, 3.0)), 0.6);
  const NetworkTopology topo(4, 3.0, 1.0, 2.5);
  EXPECT_DOUBLE_EQ(node_distance(0, topo.destination(), topo), 2.5);
  for (int a = 0; a <= 5; ++a) {
    EXPECT_EQ(node_distance(a, a, topo), 0.0);
    for (int b = 0; b <= 5; ++b) {
      EXPECT_EQ(node_distance(a, b, topo), node_distance(b, a, topo));
    }
  }
}

TEST(NodeDistance, OutOfRange) {
  const NetworkTopology topo(2, 3.0);
  EXPECT_THROW(node_distance(-1, 1, topo), DomainError);
  EXPECT_THROW(node_distance(0, 4, topo), DomainError);
}

TEST(ChannelPowerGain, Values) {
  EXPECT_DOUBLE_EQ(channel_power_gain(0, 1, NetworkTopology(1, 3.0)), 8.0);
  for (double alpha : {2.0, 3.0, 4.7}) {
    EXPECT_DOUBLE_EQ(channel_power_gain(0, 1, NetworkTopology(0, alpha)), 1.0);
  }
  // (1/5)^-3 by direct evaluation.
  const double expected = std::pow(1.0 / 5.0, -3.0);
  EXPECT_NEAR(channel_power_gain(1, 2, NetworkTopology(4, 3.0)), expected,
              1e-12 * expected);
  EXPECT_NEAR(expected, 125.0, 1e-9);
}

TEST(ChannelPowerGain, DecreasesWithDistance) {
  const NetworkTopology topo(6, 3.5);
  for (int k = 2; k <= topo.destination(); ++k) {
    EXPECT_LT(channel_power_gain(0, k, topo), channel_power_gain(0, k - 1, topo));
  }
  EXPECT_THROW(channel_power_gain(2, 2, topo), DomainError);
}

TEST(DfRate, SingleHopIsCapacity) {
  const std::vector<double> p = {1.0};
  EXPECT_DOUBLE_EQ(df_end_to_end_rate(NetworkTopology(0, 3.0), p), 1.0);
}

TEST(DfRate, MatchesDirectMinFormula) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> power(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int relays = trial % 6;
    const double alpha = 2.0 + 0.1 * trial;
    std::vector<double> p(relays + 1);
    for (double& x : p) x = power(rng);
    const double got = df_end_to_end_rate(NetworkTopology(relays, alpha), p);
    EXPECT_NEAR(got, oracle::df_rate(p, alpha), 1e-12 * std::max(1.0, got));
  }
}

TEST(DfRate, EqualPowerDominatesRecursive) {
  // Recursive P_1 = 0.875 P_0 with P_0 = 1/8 gives exactly R_ref = 1.
  const NetworkTopology topo(1, 3.0);
  const std::vector<double> recursive = {0.125, 0.875 * 0.125};
  const std::vector<double> equal = {0.125, 0.125};
  EXPECT_NEAR(df_end_to_end_rate(topo, recursive), 1.0, 1e-12);
  EXPECT_GE(df_end_to_end_rate(topo, equal), 1.0);
}

TEST(DfRate, MonotoneInPowers) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int relays = 1 + trial % 5;
    const NetworkTopology topo(relays, 3.0);
    std::vector<double> p(relays + 1);
    for (double& x : p) x = u(rng);
    const double base = df_end_to_end_rate(topo, p);
    p[trial % p.size()] += u(rng);
    EXPECT_GE(df_end_to_end_rate(topo, p), base);
  }
}

TEST(DfRate, RejectsBadAllocation) {
  const NetworkTopology topo(2, 3.0);
  EXPECT_THROW(df_end_to_end_rate(topo, std::vector<double>{1.0, 1.0}),
               DomainError);
  EXPECT_THROW(df_end_to_end_rate(topo, std::vector<double>{1.0, -1.0, 1.0}),
               DomainError);
}

}  // namespace
}  // namespace hopenergy
