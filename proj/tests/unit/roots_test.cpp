#include "milnor/errors.hpp"
#include "milnor/families.hpp"
#include "milnor/roots.hpp"
#include "milnor/verify.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace milnor {
namespace {

IntMatrix e_type_gram(TsCase c) {
  const FamilySpec t = ts_fixture(c).source;
  const auto vertices = e_subdiagram_vertices(t);
  std::vector<std::size_t> idx;
  for (std::size_t v : vertices) idx.push_back(v - 1);
  return build_family(t).lattice.ref_gram().submatrix(idx);
}

TEST(PositiveRoots, RankOneAndTwo) {
  EXPECT_EQ(positive_roots(IntMatrix{{-2}}), (std::vector<LatticeVector>{{1}}));
  const IntMatrix a2{{-2, 1}, {1, -2}};
  EXPECT_EQ(positive_roots(a2), (std::vector<LatticeVector>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(highest_root(a2), (LatticeVector{1, 1}));
  // With the opposite sign d1 + d2 is not a root; the nonnegative roots are d1 and d2 only.
  const IntMatrix flipped{{-2, -1}, {-1, -2}};
  EXPECT_EQ(positive_roots(flipped).size(), oracle::enumerate_positive_roots(flipped, 3).size());
}

TEST(PositiveRoots, RejectsIndefiniteAndMalformed) {
  EXPECT_THROW(positive_roots(build_family({Family::T, 3, 3, 3}).lattice.ref_gram()), NotFiniteTypeError);
  EXPECT_THROW(positive_roots(IntMatrix{{-2, 2}, {2, -2}}), NotFiniteTypeError);
  EXPECT_THROW(positive_roots(IntMatrix{{-2, 1}, {0, -2}}), ShapeError);
}

TEST(NegativeDefinite, Examples) {
  EXPECT_TRUE(negative_definite(IntMatrix{{-2, 1}, {1, -2}}));
  EXPECT_FALSE(negative_definite(IntMatrix{{-2, 2}, {2, -2}}));
  EXPECT_FALSE(negative_definite(IntMatrix{{-2, 3}, {3, -2}}));
}

struct ERank {
  TsCase c;
  std::size_t rank;
  int max_coeff;  // bound for the brute-force search
};

class ETypeRoots : public ::testing::TestWithParam<ERank> {};

TEST_P(ETypeRoots, ClosureMatchesBruteForceEnumeration) {
  const auto [c, rank, max_coeff] = GetParam();
  const IntMatrix g = e_type_gram(c);
  ASSERT_EQ(g.rows(), rank);
  ASSERT_TRUE(negative_definite(g));
  const auto roots = positive_roots(g);
  auto brute = oracle::enumerate_positive_roots(g, max_coeff);
  std::vector<std::vector<long long>> got;
  for (const auto& r : roots) {
    std::vector<long long> v;
    for (const auto& x : r.coords()) v.push_back(x.convert_to<long long>());
    got.push_back(v);
  }
  std::sort(got.begin(), got.end());
  std::sort(brute.begin(), brute.end());
  EXPECT_EQ(got, brute);

  // The highest root dominates every positive root coefficient-wise.
  const LatticeVector e = highest_root(g);
  for (const auto& r : roots)
    for (std::size_t i = 0; i < rank; ++i) EXPECT_LE(r[i], e[i]);
  EXPECT_EQ(height(e), height(roots.back()));
}

INSTANTIATE_TEST_SUITE_P(E678, ETypeRoots,
                         ::testing::Values(ERank{TsCase::T433, 6, 3}, ERank{TsCase::T542, 7, 4},
                                           ERank{TsCase::T732, 8, 6}));

TEST(PositiveRoots, SortedByHeightThenLex) {
  const auto roots = positive_roots(e_type_gram(TsCase::T542));
  for (std::size_t i = 1; i < roots.size(); ++i) {
    const auto h0 = height(roots[i - 1]), h1 = height(roots[i]);
    EXPECT_TRUE(h0 < h1 || (h0 == h1 && roots[i - 1] < roots[i]));
  }
}

}  // namespace
}  // namespace milnor
