#include "spinform/clifford.hpp"

#include <catch_amalgamated.hpp>

using namespace spinform;

TEST_CASE("split model at m = 1 matches the hand-evaluated matrices") {
  CliffordModule M = build_split(1);
  REQUIRE(M.dimS == 2);
  REQUIRE(M.gammas[0] == Mat::of({{0, -1}, {1, 0}}));
  REQUIRE(M.gammas[1] == Mat::of({{0, 1}, {1, 0}}));
  REQUIRE(M.grading.has_value());
  REQUIRE(*M.grading == Mat::of({{1, 0}, {0, -1}}));
  // forced by the metric: rho(e1)^2 = -Id, rho(e2)^2 = +Id
  REQUIRE(M.gammas[0] * M.gammas[0] == -Mat::identity(2));
  REQUIRE(M.gammas[1] * M.gammas[1] == Mat::identity(2));
}

TEST_CASE("split model dimensions and rejects m = 0") {
  REQUIRE(build_split(3).dimS == 8);
  REQUIRE_THROWS_AS(build_split(0), std::invalid_argument);
}

TEST_CASE("definite models at k = 1") {
  CliffordModule pos = build_definite(1, Sign::Positive);
  REQUIRE(pos.dimS == 2);
  REQUIRE(pos.gammas[0] == Mat::of({{0, -1}, {1, 0}}));
  REQUIRE(pos.gammas[0] * pos.gammas[0] == -Mat::identity(2));

  CliffordModule neg = build_definite(1, Sign::Negative);
  REQUIRE(neg.dimS == 1);
  REQUIRE(neg.gammas[0] == Mat::identity(1));
  REQUIRE(neg.gammas[0] * neg.gammas[0] == Mat::identity(1));

  REQUIRE_THROWS_AS(build_definite(0, Sign::Positive), std::invalid_argument);
}

TEST_CASE("the (2,0) module is the complex algebra realified") {
  CliffordModule M = build_definite(2, Sign::Positive);
  REQUIRE(M.dimS == 4);
  REQUIRE(M.complexStructure.has_value());
  check_module_invariants(M);
}

TEST_CASE("graded tensor product") {
  SECTION("shapes and anticommutation for (2,1)") {
    CliffordModule M = graded_tensor(build_split(1), build_definite(1, Sign::Positive));
    REQUIRE(M.sig == Signature{2, 1});
    REQUIRE(M.dimS == 4);
    check_module_invariants(M);  // includes the cross anticommutation
  }
  SECTION("(1,9) has dim 2 * 16") {
    CliffordModule M = graded_tensor(build_split(1), build_definite(8, Sign::Negative));
    REQUIRE(M.sig == Signature{1, 9});
    REQUIRE(M.dimS == 32);
    check_module_invariants(M);
  }
  SECTION("first factor must be graded") {
    // a definite odd module with trivial Schur part carries no grading
    CliffordModule bare = build_definite(3, Sign::Positive);
    REQUIRE_FALSE(bare.grading.has_value());
    REQUIRE_THROWS_AS(graded_tensor(bare, build_split(1)), std::invalid_argument);
  }
  SECTION("associative on gammas and grading") {
    CliffordModule a = graded_tensor(graded_tensor(build_split(1), build_split(1)),
                                     build_definite(1, Sign::Positive));
    CliffordModule b = graded_tensor(build_split(1),
                                     graded_tensor(build_split(1), build_definite(1, Sign::Positive)));
    REQUIRE(a.sig == b.sig);
    REQUIRE(a.gammas.size() == b.gammas.size());
    for (size_t i = 0; i < a.gammas.size(); ++i) REQUIRE(a.gammas[i] == b.gammas[i]);
    REQUIRE(a.grading.has_value());
    REQUIRE(b.grading.has_value());
    REQUIRE(*a.grading == *b.grading);
  }
}

TEST_CASE("build dispatch") {
  REQUIRE(build(3, 3).dimS == 8);
  REQUIRE(build(1, 0).dimS == 2);
  REQUIRE_THROWS_AS(build(0, 0), std::invalid_argument);
  REQUIRE(build(2, 1).recipe == Recipe::Tensor);
  REQUIRE(build(0, 4).recipe == Recipe::DefiniteEven);
}

TEST_CASE("volume element signs") {
  auto square_sign = [](const CliffordModule& M) {
    Mat w = volume_element(M);
    return (w * w == Mat::identity(M.dimS)) ? 1 : -1;
  };
  REQUIRE(square_sign(build(1, 1)) == 1);
  REQUIRE(square_sign(build(2, 0)) == -1);
  REQUIRE(square_sign(build(0, 2)) == -1);
}

TEST_CASE("Clifford relations, gradings and dimensions across a sweep") {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      CliffordModule M = build(p, n - p);
      INFO("(" << p << "," << n - p << ")");
      REQUIRE_NOTHROW(check_module_invariants(M));
      REQUIRE_NOTHROW(volume_element(M));
      // the grading must be present exactly when the module is reducible,
      // i.e. for s = 0, 1, 2, 4 mod 8
      int s = ((M.sig.s() % 8) + 8) % 8;
      bool reducible = (s == 0 || s == 1 || s == 2 || s == 4);
      REQUIRE(M.grading.has_value() == reducible);
    }
}
