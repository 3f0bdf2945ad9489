#include "spinform/classification.hpp"

#include <catch_amalgamated.hpp>

using namespace spinform;

TEST_CASE("count_embeddings on the pinned examples") {
  SECTION("(2,0)") {
    ClassificationCell c = count_embeddings(build(2, 0));
    REQUIRE(c.lplus == 6);
    REQUIRE(c.lminus == 2);
  }
  SECTION("(1,1)") {
    ClassificationCell c = count_embeddings(build(1, 1));
    REQUIRE(c.lplus == 2);
    REQUIRE(c.lminus == 0);
  }
  SECTION("(1,0)") {
    ClassificationCell c = count_embeddings(build(1, 0));
    REQUIRE(c.hasQuad);
    REQUIRE(c.quad == std::array<int, 4>{2, 1, 0, 1});
  }
}

TEST_CASE("emit_table representatives and cells") {
  TableDocument pairs = emit_table(8, TableKind::Pairs);
  SECTION("(n,s) = (1,-1) is represented by (0,1) with value 1,0") {
    const TableCell* c = pairs.find(1, 7);
    REQUIRE(c != nullptr);
    REQUIRE_FALSE(c->absent);
    REQUIRE(c->cell.sig == Signature{0, 1});
    REQUIRE(c->cell.countsString() == "1,0");
  }
  SECTION("(n,s) = (0,0) is represented by (4,4) with value 1,1") {
    const TableCell* c = pairs.find(0, 0);
    REQUIRE(c != nullptr);
    REQUIRE(c->cell.sig == Signature{4, 4});
    REQUIRE(c->cell.countsString() == "1,1");
  }
  SECTION("quadruple cell (2,2) is 4,2,0,2") {
    TableDocument quads = emit_table(2, TableKind::Quadruples);
    const TableCell* c = quads.find(2, 2);
    REQUIRE(c != nullptr);
    REQUIRE(c->cell.countsString() == "4,2,0,2");
  }
  SECTION("unrealizable residues are absent") {
    const TableCell* c = pairs.find(1, 3);
    REQUIRE(c != nullptr);
    REQUIRE(c->absent);
  }
}

TEST_CASE("check_symmetries validates the emitted table") {
  TableDocument pairs = emit_table(8, TableKind::Pairs);
  Report rep = check_symmetries(pairs);
  REQUIRE(rep.pass());
  // the pinned instances from the published table
  REQUIRE(pairs.find(2, 2)->cell.countsString() == "6,2");
  REQUIRE(pairs.find(6, 2)->cell.countsString() == "2,6");  // supersymmetric partner
  REQUIRE(pairs.find(1, 1)->cell.countsString() == "3,1");
  REQUIRE(pairs.find(3, 1)->cell.countsString() == "3,1");  // reflection about n = 2
}

TEST_CASE("algebra_type on the pinned examples") {
  REQUIRE(algebra_type(build(3, 4)) == std::pair<std::string, std::string>{"R", "2R"});
  REQUIRE(algebra_type(build(2, 0)) == std::pair<std::string, std::string>{"C", "H"});
  REQUIRE(algebra_type(build(4, 0)) == std::pair<std::string, std::string>{"2H", "H"});
}

TEST_CASE("build_bracket") {
  SECTION("zero coefficients give the abelian odd part") {
    CliffordModule M = build(1, 1);
    ExtendedPoincareAlgebra A = build_bracket(M, {Rational(0), Rational(0)}, 1);
    for (const auto& P : A.Pi) REQUIRE(P.is_zero());
  }
  SECTION("(0,1) super bracket is pi(s,s) = s^2 e0 up to scale") {
    CliffordModule M = build(0, 1);
    ExtendedPoincareAlgebra A = build_bracket(M, {Rational(1)}, 1);
    REQUIRE(A.Pi.size() == 1);
    REQUIRE_FALSE(A.Pi[0].is_zero());
    REQUIRE(A.Pi[0].is_symmetric());
  }
  SECTION("(1,1) carries a two-parameter family of super brackets") {
    CliffordModule M = build(1, 1);
    REQUIRE_NOTHROW(build_bracket(M, {Rational(1), Rational(0)}, 1));
    REQUIRE_NOTHROW(build_bracket(M, {Rational(2, 3), Rational(-5, 7)}, 1));
    // no Lie-algebra brackets at (1,1): the sigma = -1 basis is empty
    REQUIRE_NOTHROW(build_bracket(M, {}, -1));
    REQUIRE_THROWS_AS(build_bracket(M, {Rational(1)}, -1), std::invalid_argument);
  }
}

TEST_CASE("the Jacobi checker rejects a non-equivariant bracket") {
  CliffordModule M = build(2, 0);
  std::vector<Mat> fake(2, Mat::zero(4, 4));
  fake[0].at(0, 0) = 1;  // symmetric but not so(V)-equivariant
  REQUIRE_FALSE(graded_jacobi_holds(M, fake, 1));
}

TEST_CASE("extend_N") {
  CliffordModule M = build(0, 1);
  ExtendedPoincareAlgebra A = build_bracket(M, {Rational(1)}, 1);
  SECTION("orthogonal l = 1 is the identity") {
    NExtendedAlgebra e = extend_N(M, A, 1, ExtKind::Orthogonal);
    REQUIRE(e.epsilon == 1);
    REQUIRE(e.Pi.size() == A.Pi.size());
    for (size_t k = 0; k < A.Pi.size(); ++k) REQUIRE(e.Pi[k] == A.Pi[k]);
  }
  SECTION("symplectic flips epsilon and realizes pi * omega") {
    NExtendedAlgebra e = extend_N(M, A, 1, ExtKind::Symplectic);
    REQUIRE(e.epsilon == -1);
    REQUIRE(e.innerDim == 2);
    for (size_t k = 0; k < A.Pi.size(); ++k) {
      REQUIRE(e.Pi[k].is_skew());
      REQUIRE(e.Pi[k] == kronecker(A.Pi[k], Mat::of({{0, 1}, {-1, 0}})));
    }
  }
  SECTION("orthogonal l = 2 realizes pi * <.,.>") {
    NExtendedAlgebra e = extend_N(M, A, 2, ExtKind::Orthogonal);
    REQUIRE(e.epsilon == 1);
    for (size_t k = 0; k < A.Pi.size(); ++k)
      REQUIRE(e.Pi[k] == kronecker(A.Pi[k], Mat::identity(2)));
  }
}

TEST_CASE("classify_complex on the pinned examples") {
  REQUIRE(classify_complex(1).countsString() == "1,0");
  REQUIRE(classify_complex(2).countsString() == "2,0,0,0");
  REQUIRE(classify_complex(7).countsString() == "0,1");
}

TEST_CASE("check_periodicity up to the 8-shifts of dimension 1") {
  Report rep = check_periodicity(9);
  REQUIRE(rep.pass());
  REQUIRE(rep.items.size() > 0);
}
