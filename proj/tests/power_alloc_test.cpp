#include "hopenergy/power_alloc.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hopenergy/errors.hpp"
#include "oracles.hpp"

namespace hopenergy {
namespace {

TEST(SourcePower, Fig2Values) {
  EXPECT_NEAR(source_power(4, 3.0, 1.0), 0.008, 1e-15);
  EXPECT_NEAR(power_db(source_power(4, 3.0, 1.0)), -20.9691, 1e-3);
  EXPECT_NEAR(source_power(4, 4.0, 1.0), 0.0016, 1e-15);
  EXPECT_NEAR(power_db(source_power(4, 4.0, 1.0)), -27.9588, 1e-3);
  EXPECT_DOUBLE_EQ(source_power(0, 3.0, 2.5), 2.5);
}

TEST(SourcePower, RejectsBadInput) {
  EXPECT_THROW(source_power(-1, 3.0, 1.0), DomainError);
  EXPECT_THROW(source_power(1, 0.0, 1.0), DomainError);
  EXPECT_THROW(source_power(1, 3.0, 0.0), DomainError);
}

TEST(RecursiveAllocation, SecondNodeRatio) {
  for (int relays : {1, 2, 5}) {
    const auto alloc = recursive_allocation(relays, 3.0, 1.0);
    EXPECT_NEAR(alloc.powers[1] / alloc.powers[0], 0.875, 1e-15);
  }
  EXPECT_NEAR(power_db(recursive_allocation(4, 3.0, 1.0).powers[1]), -21.549,
              1e-3);
  EXPECT_NEAR(power_db(recursive_allocation(4, 4.0, 1.0).powers[1]), -28.239,
              1e-3);
}

TEST(RecursiveAllocation, MatchesGainBasedOracle) {
  for (int relays = 0; relays <= 12; ++relays) {
    for (double alpha : {2.0, 3.0, 4.0, 5.5}) {
      const auto alloc = recursive_allocation(relays, alpha, 1.7);
      const auto expected = oracle::allocation_from_gains(relays, alpha, 1.7);
      ASSERT_EQ(alloc.powers.size(), expected.size());
      EXPECT_EQ(alloc.relay_count(), relays);
      EXPECT_EQ(alloc.kind, AllocationKind::kRecursive);
      for (std::size_t n = 0; n < expected.size(); ++n) {
        EXPECT_NEAR(alloc.powers[n], expected[n], 1e-12 * expected[0]);
      }
    }
  }
}

TEST(RecursiveAllocation, StrictlyDecreasingAndBounded) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> alpha_dist(0.5, 6.0);
  std::uniform_int_distribution<int> relay_dist(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = alpha_dist(rng);
    const int relays = relay_dist(rng);
    const auto alloc = recursive_allocation(relays, alpha, 1.0);
    for (int n = 1; n <= relays; ++n) {
      EXPECT_LT(alloc.powers[n], alloc.powers[n - 1])
          << "alpha=" << alpha << " N=" << relays << " n=" << n;
      EXPECT_GT(alloc.powers[n], 0.0);
    }
    EXPECT_LE(alloc.total(), (relays + 1) * alloc.source());
  }
}

TEST(RecursiveAllocation, ReachesReferenceRate) {
  for (int relays = 0; relays <= 20; ++relays) {
    for (double alpha : {2.0, 3.0, 4.0}) {
      for (double p_ref : {0.01, 1.0, 15.0}) {
        const NetworkTopology topo(relays, alpha);
        const double rate =
            df_end_to_end_rate(topo, recursive_allocation(relays, alpha, p_ref));
        EXPECT_NEAR(rate, capacity(p_ref), 1e-12 * capacity(p_ref));
        EXPECT_GE(df_end_to_end_rate(topo, equal_allocation(relays, alpha, p_ref)),
                  capacity(p_ref) * (1 - 1e-12));
      }
    }
  }
}

TEST(RecursiveAllocation, ConvergenceGapAlpha4) {
  // Entries settle quickly; the distance from P_0 to the tail is ~0.34 dB.
  const auto powers = recursive_powers(1.0, 4.0, 200);
  const double gap_db = power_db(powers.front()) - power_db(powers.back());
  EXPECT_GE(gap_db, 0.30);
  EXPECT_LE(gap_db, 0.40);
}

TEST(EqualAllocation, Constant) {
  const auto alloc = equal_allocation(1, 3.0, 1.0);
  EXPECT_EQ(alloc.kind, AllocationKind::kEqual);
  EXPECT_EQ(alloc.powers, (std::vector<double>{0.125, 0.125}));
  EXPECT_EQ(equal_allocation(0, 3.0, 2.0).powers, std::vector<double>{2.0});
  const auto five = equal_allocation(4, 3.0, 1.0);
  ASSERT_EQ(five.powers.size(), 5u);
  for (double p : five.powers) EXPECT_NEAR(p, 0.008, 1e-15);
}

}  // namespace
}  // namespace hopenergy
