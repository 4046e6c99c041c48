#include "milnor/errors.hpp"
#include "milnor/families.hpp"
#include "milnor/lattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <memory>
#include <random>

namespace milnor {
namespace {

const IntMatrix kTripleGram{{-2, -2, 0}, {-2, -2, 1}, {0, 1, -2}};

TEST(Lattice, RejectsMalformedReferenceGram) {
  EXPECT_THROW(Lattice(IntMatrix(2, 3)), ShapeError);
  EXPECT_THROW(Lattice(IntMatrix{{-2, 1}, {0, -2}}), ShapeError);
  EXPECT_THROW(Lattice(IntMatrix{{-2, 1}, {1, 2}}), ShapeError);
  EXPECT_NO_THROW(Lattice(IntMatrix{{-2, 1}, {1, -2}}));
}

TEST(Basis, RejectsNonUnimodularRows) {
  auto lat = std::make_shared<const Lattice>(IntMatrix{{-2, 0}, {0, -2}});
  EXPECT_THROW(Basis(lat, IntMatrix{{1, 1}, {1, -1}}), Error);
  EXPECT_THROW(Basis(lat, IntMatrix{{1, 0}, {0, 1}, {0, 0}}), Error);
}

TEST(Basis, RejectsRowsThatAreNotMinusTwoVectors) {
  auto lat = std::make_shared<const Lattice>(IntMatrix{{-2, 1}, {1, -2}});
  // Determinant 1, but <2 d1 + d2, 2 d1 + d2> = -6.
  EXPECT_THROW(Basis(lat, IntMatrix{{2, 1}, {1, 1}}), Error);
  EXPECT_NO_THROW(Basis(lat, IntMatrix{{1, 1}, {0, 1}}));
}

TEST(BilinearValue, Examples) {
  const Lattice one(IntMatrix{{-2}});
  EXPECT_EQ(bilinear_value(one, {1}, {1}), -2);

  const Lattice s = build_family({Family::S, 3, 3, 3}).lattice;
  const std::size_t mu = s.rank();
  EXPECT_EQ(bilinear_value(s, LatticeVector::unit(mu, 1), LatticeVector::unit(mu, 3)), 0);
  EXPECT_EQ(bilinear_value(s, LatticeVector::unit(mu, 2), LatticeVector::unit(mu, 3)), 1);
}

TEST(BilinearValue, DimensionMismatch) {
  const Lattice lat(IntMatrix{{-2, 1}, {1, -2}});
  EXPECT_THROW(bilinear_value(lat, {1, 0, 0}, {1, 0}), DimensionError);
}

TEST(BilinearValue, Symmetric) {
  std::mt19937_64 rng(3);
  const Lattice lat = build_family({Family::T, 4, 3, 3}).lattice;
  for (int t = 0; t < 200; ++t) {
    std::vector<Integer> a(lat.rank()), b(lat.rank());
    for (auto& x : a) x = static_cast<long long>(rng() % 21) - 10;
    for (auto& x : b) x = static_cast<long long>(rng() % 21) - 10;
    EXPECT_EQ(bilinear_value(lat, LatticeVector(a), LatticeVector(b)),
              bilinear_value(lat, LatticeVector(b), LatticeVector(a)));
  }
}

TEST(Reflect, Examples) {
  const Lattice lat(IntMatrix{{-2, 1}, {1, -2}});
  const LatticeVector d1{1, 0}, d2{0, 1};
  EXPECT_EQ(reflect(lat, d1, d1), -d1);
  EXPECT_EQ(reflect(lat, d1, d2), d2 + d1);

  const Lattice ortho(IntMatrix{{-2, 0}, {0, -2}});
  EXPECT_EQ(reflect(ortho, d1, d2), d2);
}

TEST(Reflect, RejectsNonRoots) {
  const Lattice lat(IntMatrix{{-2, 1}, {1, -2}});
  EXPECT_THROW(reflect(lat, {1, -1}, {1, 0}), NotARootError);  // <d,d> = -6
  EXPECT_THROW(reflect(lat, {0, 0}, {1, 0}), NotARootError);
}

TEST(GramOfBasis, IdentityRowsGiveReferenceGram) {
  auto lat = std::make_shared<const Lattice>(kTripleGram);
  EXPECT_EQ(gram_of_basis(Basis::identity(lat)), kTripleGram);
}

TEST(GramOfBasis, OrbitRowsStayMinusTwoVectors) {
  // Rows k d2 - (k-1) d1 and (k+1) d2 - k d1 over the pair with <d1,d2> = -2.
  auto lat = std::make_shared<const Lattice>(IntMatrix{{-2, -2}, {-2, -2}});
  EXPECT_EQ(bilinear_value(*lat, {-1, 2}, {-1, 2}), -2);
  EXPECT_EQ(bilinear_value(*lat, {-2, 3}, {-2, 3}), -2);
}

TEST(RankAndRadical, Examples) {
  EXPECT_EQ(rank_and_radical(IntMatrix{{-2, 1}, {1, -2}}), (RankInfo{2, 0}));
  EXPECT_THROW(rank_and_radical(IntMatrix{{-2, 1}, {0, -2}}), ShapeError);
}

struct RadicalCase {
  int p, q, r;
  std::size_t rank, radical;
};

class FamilyRadical : public ::testing::TestWithParam<RadicalCase> {};

TEST_P(FamilyRadical, MatchesRationalOracle) {
  const auto c = GetParam();
  const FamilyInstance inst = build_family({Family::T, c.p, c.q, c.r});
  const IntMatrix& g = inst.lattice.ref_gram();
  const RankInfo info = rank_and_radical(g);
  EXPECT_EQ(info.rank, oracle::rational_rank(g));
  EXPECT_EQ(info.rank + info.radical_rank, g.rows());
  EXPECT_EQ(info, (RankInfo{c.rank, c.radical}));
}

// Ranks below come from the rational elimination oracle; the radical ranks
// 2 and 1 are the semidefinite and corank-one cases.
INSTANTIATE_TEST_SUITE_P(SemidefiniteAndCorankOne, FamilyRadical,
                         ::testing::Values(RadicalCase{3, 3, 3, 6, 2}, RadicalCase{2, 4, 4, 7, 2},
                                           RadicalCase{2, 3, 6, 8, 2}, RadicalCase{4, 3, 3, 8, 1},
                                           RadicalCase{5, 4, 2, 9, 1}, RadicalCase{7, 3, 2, 10, 1}));

}  // namespace
}  // namespace milnor
