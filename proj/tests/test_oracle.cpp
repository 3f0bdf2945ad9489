#include "spinform/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace spinform;

TEST_CASE("oracle dimensions on the pinned examples") {
  REQUIRE(oracle::equivariant_map_space(build(1, 1)).size() == 2);
  REQUIRE(oracle::equivariant_map_space(build(0, 1)).size() == 1);
  REQUIRE(oracle::equivariant_map_space(build(2, 0)).size() == 8);
}

TEST_CASE("multiplication space dimensions on the pinned examples") {
  REQUIRE(oracle::multiplication_space_dim(build(1, 1)) == 2);
  REQUIRE(oracle::multiplication_space_dim(build(1, 0)) == 4);
  REQUIRE(oracle::multiplication_space_dim(build(0, 2)) == 2);
}

TEST_CASE("symmetry decomposition on the pinned examples") {
  SECTION("(1,1) splits as (2,0,0,0)") {
    CliffordModule M = build(1, 1);
    auto c = oracle::symmetry_decompose(oracle::equivariant_map_space(M), M.grading);
    REQUIRE(c.hasQuad);
    REQUIRE(c.quad == std::array<int, 4>{2, 0, 0, 0});
  }
  SECTION("(1,0) splits as (2,1,0,1)") {
    CliffordModule M = build(1, 0);
    auto c = oracle::symmetry_decompose(oracle::equivariant_map_space(M), M.grading);
    REQUIRE(c.hasQuad);
    REQUIRE(c.quad == std::array<int, 4>{2, 1, 0, 1});
  }
  SECTION("(0,2) is irreducible with pair (2,0)") {
    CliffordModule M = build(0, 2);
    auto c = oracle::symmetry_decompose(oracle::equivariant_map_space(M), M.grading);
    REQUIRE_FALSE(c.hasQuad);
    REQUIRE(c.dplus == 2);
    REQUIRE(c.dminus == 0);
  }
}

TEST_CASE("oracle basis solves the raw equivariance system") {
  // cross-check against j_rho over the invariant forms: mutual span equality
  for (auto [p, q] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{3, 0}}) {
    CliffordModule M = build(p, q);
    INFO("(" << p << "," << q << ")");
    auto J = oracle::equivariant_map_space(M);
    auto forms = invariant_forms(M);
    REQUIRE(J.size() == forms.size());
    std::vector<Mat> vectors;
    auto flatten = [&](const EquivariantMap& j) {
      Mat flat(M.sig.n() * M.dimS * M.dimS, 1);
      int off = 0;
      for (const auto& c : j.components) {
        Mat v = c.vec();
        for (int r = 0; r < v.rows(); ++r) flat.at(off + r, 0) = v.at(r, 0);
        off += v.rows();
      }
      return flat;
    };
    for (const auto& j : J) vectors.push_back(flatten(j));
    int oracleRank = span_rank(vectors);
    for (const auto& g : forms) vectors.push_back(flatten(j_rho(M, g)));
    REQUIRE(oracleRank == static_cast<int>(J.size()));
    REQUIRE(span_rank(vectors) == oracleRank);
  }
}

TEST_CASE("oracle enforces its dimension bound, which is configurable") {
  REQUIRE_THROWS_AS(oracle::equivariant_map_space(build(4, 3)), std::invalid_argument);
  // raising the bound still gives the right dimension: s = 1, so b = 4
  REQUIRE(oracle::equivariant_map_space(build(4, 3), 7).size() == 4);
}
