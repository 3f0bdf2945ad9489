#include "spinform/invariants.hpp"

#include <catch_amalgamated.hpp>

using namespace spinform;

TEST_CASE("dim B matches b(s) on the pinned examples") {
  REQUIRE(invariant_forms(build(1, 1)).size() == 2);
  REQUIRE(invariant_forms(build(1, 0)).size() == 4);
  REQUIRE(invariant_forms(build(0, 1)).size() == 1);
}

TEST_CASE("invariant forms satisfy the invariance equation exactly") {
  for (auto [p, q] : {std::pair{2, 1}, std::pair{0, 3}, std::pair{2, 2}}) {
    CliffordModule M = build(p, q);
    auto gens = so_generators(M);
    for (const auto& G : invariant_forms(M))
      for (const auto& L : gens) REQUIRE((L.transpose() * G + G * L).is_zero());
  }
}

TEST_CASE("Schur algebra identification on the pinned examples") {
  REQUIRE(schur_algebra(build(1, 0)).isoType == "R(2)");
  REQUIRE(schur_algebra(build(1, 1)).isoType == "R+R");
  REQUIRE(schur_algebra(build(0, 3)).isoType == "H");
}

TEST_CASE("dim B equals dim of the Schur algebra") {
  for (int n = 1; n <= 5; ++n)
    for (int p = 0; p <= n; ++p) {
      CliffordModule M = build(p, n - p);
      INFO("(" << p << "," << n - p << ")");
      REQUIRE(invariant_forms(M).size() == schur_algebra(M).basis.size());
    }
}

TEST_CASE("fundamental invariants of the pinned forms") {
  SECTION("(1,1), f") {
    CliffordModule M = build(1, 1);
    auto [f, fE] = split_forms(1);
    REQUIRE(fundamental_invariants(M, f) == FundamentalInvariants{-1, -1, -1});
  }
  SECTION("(2,2), f") {
    CliffordModule M = build(2, 2);
    auto [f, fE] = split_forms(2);
    REQUIRE(fundamental_invariants(M, f) == FundamentalInvariants{-1, -1, 1});
  }
  SECTION("(0,2), h") {
    CliffordModule M = build(0, 2);
    FundamentalInvariants h = fundamental_invariants(M, canonical_form(M));
    REQUIRE(h.tau == 1);
    REQUIRE(h.sigma == 1);
  }
}

TEST_CASE("split forms") {
  auto [f1, fE1] = split_forms(1);
  REQUIRE(f1 == Mat::of({{0, 1}, {-1, 0}}));
  REQUIRE(fundamental_invariants(build(1, 1), f1).sigma == -1);
  auto [f4, fE4] = split_forms(4);
  REQUIRE(fundamental_invariants(build(4, 4), fE4) == FundamentalInvariants{1, 1, 1});
}

TEST_CASE("canonical forms") {
  // negative definite: the scalar product, tau = +1; positive: tau = -1
  CliffordModule neg = build(0, 3);
  REQUIRE(fundamental_invariants(neg, canonical_form(neg)).tau == 1);
  CliffordModule pos = build(3, 0);
  REQUIRE(fundamental_invariants(pos, canonical_form(pos)).tau == -1);
  // split: h = f_E
  CliffordModule split = build(2, 2);
  REQUIRE(canonical_form(split) == split_forms(2).second);
}

TEST_CASE("endomorphism invariants on the pinned examples") {
  SECTION("identity") {
    CliffordModule M = build(2, 2);
    REQUIRE(endo_invariants(M, canonical_form(M), Mat::identity(M.dimS)) ==
            FundamentalInvariants{1, 1, 1});
  }
  SECTION("E on split modules") {
    for (int m : {1, 2}) {
      CliffordModule M = build_split(m);
      FundamentalInvariants e = endo_invariants(M, canonical_form(M), *M.grading);
      REQUIRE(e.tau == -1);
      REQUIRE(e.sigma == (m % 2 == 0 ? 1 : -1));
      REQUIRE(e.iota == 1);
    }
  }
  SECTION("J on (6,0)") {
    CliffordModule M = build(6, 0);
    Mat J;
    for (const auto& op : M.ops)
      if (op.name == "J") J = op.op;
    FundamentalInvariants j = endo_invariants(M, canonical_form(M), J);
    REQUIRE(j.tau == -1);
    REQUIRE(j.sigma == -1);
  }
}

TEST_CASE("admissible bases on the pinned examples") {
  SECTION("(1,1): two entries spanning B") {
    auto ab = admissible_basis(build(1, 1));
    REQUIRE(ab.entries.size() == 2);
    REQUIRE(ab.entries[0].name == "Id");
    REQUIRE(ab.entries[1].name == "E");
  }
  SECTION("(2,0): eight entries with the m = 1 rows") {
    auto ab = admissible_basis(build(2, 0));
    REQUIRE(ab.entries.size() == 8);
    std::map<std::string, std::string> got;
    for (const auto& e : ab.entries) got[e.name] = invariants_to_string(e.endoInv);
    REQUIRE(got.at("Id") == "+++");
    REQUIRE(got.at("I") == "+-+");
    REQUIRE(got.at("J") == "+--");
    REQUIRE(got.at("K") == "+--");
    REQUIRE(got.at("E") == "-++");
    REQUIRE(got.at("EI") == "--+");
    REQUIRE(got.at("EJ") == "-+-");
    REQUIRE(got.at("EK") == "-+-");
  }
  SECTION("(0,5): four entries Id, I, Jhat, Khat with (tau,sigma) rows") {
    auto ab = admissible_basis(build(0, 5));
    REQUIRE(ab.entries.size() == 4);
    std::vector<std::string> names, rows;
    for (const auto& e : ab.entries) {
      names.push_back(e.name);
      rows.push_back(std::string() + sign_char(e.formInv.tau) + sign_char(e.formInv.sigma));
    }
    REQUIRE(names == std::vector<std::string>{"Id", "I", "Jhat", "Khat"});
    REQUIRE(rows == std::vector<std::string>{"++", "+-", "+-", "+-"});
  }
}

TEST_CASE("admissible bases exist and self-check across mixed signatures") {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      INFO("(" << p << "," << n - p << ")");
      REQUIRE_NOTHROW(admissible_basis(build(p, n - p)));
    }
}

TEST_CASE("j_rho") {
  SECTION("zero form gives the zero map") {
    CliffordModule M = build(1, 1);
    EquivariantMap j = j_rho(M, Mat::zero(2, 2));
    REQUIRE(j.sigma == 0);
    for (const auto& c : j.components) REQUIRE(c.is_zero());
  }
  SECTION("(1,1) with f: all components symmetric") {
    CliffordModule M = build(1, 1);
    EquivariantMap j = j_rho(M, split_forms(1).first);
    REQUIRE(j.sigma == 1);
    for (const auto& c : j.components) REQUIRE(c.is_symmetric());
  }
  SECTION("(0,1): j(e0) = [1]") {
    CliffordModule M = build(0, 1);
    EquivariantMap j = j_rho(M, canonical_form(M));
    REQUIRE(j.components.size() == 1);
    REQUIRE(j.components[0] == Mat::identity(1));
    REQUIRE(j.sigma == 1);
  }
}

TEST_CASE("generic invariant forms are legitimately non-admissible") {
  // f and f_E have opposite symmetry and type at m = 1, so their sum has
  // mixed behavior: the invariants must come back undefined, not throw
  CliffordModule M = build(1, 1);
  auto [f, fE] = split_forms(1);
  FundamentalInvariants fi = fundamental_invariants(M, f + fE);
  REQUIRE(fi.sigma == 0);
  REQUIRE(fi.tau == 0);
}

TEST_CASE("admissible endomorphisms are admissible for every admissible form") {
  // every basis endomorphism must be beta-admissible for every basis form,
  // not only for the canonical one
  for (auto [p, q] : {std::pair{2, 0}, std::pair{1, 1}, std::pair{0, 5}, std::pair{3, 1}}) {
    CliffordModule M = build(p, q);
    auto ab = admissible_basis(M);
    for (const auto& a : ab.entries)
      for (const auto& b : ab.entries) {
        INFO("(" << p << "," << q << ") endo " << a.name << " against form " << b.name);
        FundamentalInvariants fi =
            spinform::detail::endo_invariants_raw(M.gammas, M.grading, b.formGram, a.endo);
        REQUIRE(fi.tau != 0);
        REQUIRE(fi.sigma != 0);
        if (M.grading) REQUIRE(fi.iota != 0);
      }
  }
}

TEST_CASE("identify_matrix_algebra rejects inconsistent input") {
  // span{Id, nilpotent} is 2-dimensional with degenerate quadratic structure
  Mat nil = Mat::of({{0, 1}, {0, 0}});
  REQUIRE_THROWS_AS(identify_matrix_algebra({Mat::identity(2), nil}), std::logic_error);
}
