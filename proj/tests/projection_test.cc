//
// Copyright 2026 The OPORP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "oporp/projection.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oporp/error.h"
#include "oporp/random.h"

namespace oporp {
namespace {

TEST(RandomTest, DeriveSeedSeparatesStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (std::uint64_t stream = 0; stream < 50; ++stream) {
      seen.insert(DeriveSeed(seed, stream));
    }
  }
  EXPECT_EQ(seen.size(), 2500u);
}

TEST(RandomTest, UniformBelowStaysInRangeAndCoversIt) {
  SplitMix64 gen(7);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const std::uint64_t x = UniformBelow(gen, 7);
    ASSERT_LT(x, 7u);
    ++counts[x];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(RandomTest, UniformUnitIsHalfOpen) {
  SplitMix64 gen(3);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = UniformUnit(gen);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(PermutationTest, IsBijection) {
  for (std::size_t dim : {1u, 2u, 7u, 64u, 1000u}) {
    const Permutation p = GeneratePermutation(dim, dim * 31);
    std::vector<std::uint32_t> sorted = p.mapping;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < dim; ++i) ASSERT_EQ(sorted[i], i);
  }
}

TEST(PermutationTest, UniformOverAllPermutationsOfFive) {
  constexpr int kSeeds = 100000;
  std::map<std::vector<std::uint32_t>, int> counts;
  for (int seed = 0; seed < kSeeds; ++seed) {
    ++counts[GeneratePermutation(5, seed).mapping];
  }
  ASSERT_EQ(counts.size(), 120u);
  const double expected = kSeeds / 120.0;
  double chi2 = 0.0;
  for (const auto& [perm, c] : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  // 119 degrees of freedom; 175 is roughly the 0.9995 quantile.
  EXPECT_LT(chi2, 175.0);
}

TEST(PermutationTest, RejectsEmptyDimension) {
  try {
    GeneratePermutation(0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDimension);
  }
}

struct MomentCase {
  ProjectionDistribution dist;
  double fourth;
};

class DistributionMomentTest : public ::testing::TestWithParam<MomentCase> {};

TEST_P(DistributionMomentTest, MatchesFirstFourMoments) {
  const MomentCase& c = GetParam();
  EXPECT_DOUBLE_EQ(FourthMoment(c.dist), c.fourth);
  constexpr int kDraws = 1000000;
  double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double r = ProjectionEntry(c.dist, 99, i);
    m1 += r;
    m2 += r * r;
    m3 += r * r * r;
    m4 += r * r * r * r;
  }
  m1 /= kDraws;
  m2 /= kDraws;
  m3 /= kDraws;
  m4 /= kDraws;
  // Sampling sd of m4 is sqrt(E r^8 - s^2) / 1000; the tolerances are > 5 sd.
  EXPECT_NEAR(m1, 0.0, 0.006);
  EXPECT_NEAR(m2, 1.0, 0.015);
  EXPECT_NEAR(m3, 0.0, 0.05 * c.fourth);
  EXPECT_NEAR(m4, c.fourth, 0.03 * c.fourth);
}

INSTANTIATE_TEST_SUITE_P(
    AllKinds, DistributionMomentTest,
    ::testing::Values(MomentCase{ProjectionDistribution::Rademacher(), 1.0},
                      MomentCase{ProjectionDistribution::Gaussian(), 3.0},
                      MomentCase{ProjectionDistribution::ScaledUniform(), 1.8},
                      MomentCase{ProjectionDistribution::Sparse(1.0), 1.0},
                      MomentCase{ProjectionDistribution::Sparse(10.0), 10.0}));

TEST(ProjectionEntryTest, RademacherIsPlusMinusOne) {
  const auto dist = ProjectionDistribution::Rademacher();
  int plus = 0;
  for (int i = 0; i < 10000; ++i) {
    const double r = ProjectionEntry(dist, 5, i);
    ASSERT_TRUE(r == 1.0 || r == -1.0);
    plus += r > 0;
  }
  EXPECT_NEAR(plus, 5000, 300);
}

TEST(ProjectionEntryTest, SparseZeroFraction) {
  const auto dist = ProjectionDistribution::Sparse(4.0);
  int zeros = 0;
  for (int i = 0; i < 100000; ++i) {
    const double r = ProjectionEntry(dist, 5, i);
    ASSERT_TRUE(r == 0.0 || std::abs(r) == 2.0);
    zeros += r == 0.0;
  }
  EXPECT_NEAR(zeros / 100000.0, 0.75, 0.006);
}

TEST(ProjectionEntryTest, VectorMatchesEntryAndSeedMatters) {
  const auto dist = ProjectionDistribution::Gaussian();
  const ProjectionVector r = GenerateProjectionVector(100, dist, 17);
  ASSERT_EQ(r.entries.size(), 100u);
  for (std::size_t i = 0; i < 100; ++i) {
    EXPECT_EQ(r.entries[i], ProjectionEntry(dist, 17, i));
  }
  EXPECT_NE(GenerateProjectionVector(100, dist, 18).entries, r.entries);
}

TEST(ProjectionDistributionTest, NamesRoundTrip) {
  for (const auto& d :
       {ProjectionDistribution::Rademacher(), ProjectionDistribution::Gaussian(),
        ProjectionDistribution::ScaledUniform(),
        ProjectionDistribution::Sparse(3.5)}) {
    EXPECT_EQ(ProjectionDistribution::FromName(d.Name(), d.sparsity()), d);
  }
  EXPECT_THROW(ProjectionDistribution::FromName("cauchy"), Error);
}

TEST(ProjectionDistributionTest, SparseNeedsSAtLeastOne) {
  try {
    ProjectionDistribution::Sparse(0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParameter);
  }
}

}  // namespace
}  // namespace oporp
