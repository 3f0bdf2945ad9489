#include "spinform/matrix.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace spinform;

namespace {

Mat random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> numDist(-5, 5);
  std::uniform_int_distribution<int> denDist(1, 3);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(numDist(rng), denDist(rng));
  return m;
}

}  // namespace

TEST_CASE("kernel_basis on the pinned examples") {
  SECTION("invertible matrix has trivial kernel") {
    REQUIRE(kernel_basis(Mat::identity(2)).empty());
  }
  SECTION("rank-1 symmetric") {
    auto k = kernel_basis(Mat::of({{1, 1}, {1, 1}}));
    REQUIRE(k.size() == 1);
    REQUIRE(k[0].at(0, 0) == 1);
    REQUIRE(k[0].at(1, 0) == -1);
  }
  SECTION("single equation") {
    auto k = kernel_basis(Mat::of({{2, 4}}));
    REQUIRE(k.size() == 1);
    REQUIRE(k[0].at(0, 0) == 2);
    REQUIRE(k[0].at(1, 0) == -1);
  }
}

TEST_CASE("kernel vectors are exact and complete") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    Mat M = random_matrix(rng, rows, cols);
    auto ker = kernel_basis(M);
    for (const auto& v : ker) REQUIRE((M * v).is_zero());
    REQUIRE(rank(M) + static_cast<int>(ker.size()) == cols);
    // independence and the normalization contract
    REQUIRE(span_rank(ker) == static_cast<int>(ker.size()));
    for (const auto& v : ker) {
      Integer g = 0;
      Rational first = 0;
      for (int i = 0; i < v.rows(); ++i) {
        REQUIRE(den(v.at(i, 0)) == 1);
        g = boost::multiprecision::gcd(g, num(v.at(i, 0)));
        if (first == 0) first = v.at(i, 0);
      }
      REQUIRE(g == 1);
      REQUIRE(first > 0);
    }
  }
}

TEST_CASE("kernel output is deterministic") {
  Mat M = Mat::of({{1, 2, 3, 0}, {2, 4, 6, 0}, {0, 0, 0, 5}});
  auto a = kernel_basis(M);
  auto b = kernel_basis(M);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
}

TEST_CASE("commutant_basis on the pinned examples") {
  SECTION("empty constraint gives all of End") {
    REQUIRE(commutant_basis({}, 2).size() == 4);
  }
  SECTION("eigenspace block structure") {
    auto c = commutant_basis({Mat::of({{1, 0}, {0, -1}})}, 2);
    REQUIRE(c.size() == 2);
    for (const auto& x : c) {
      REQUIRE(x.at(0, 1) == 0);
      REQUIRE(x.at(1, 0) == 0);
    }
  }
  SECTION("commutant of a complex structure") {
    Mat rot = Mat::of({{0, -1}, {1, 0}});
    auto c = commutant_basis({rot}, 2);
    REQUIRE(c.size() == 2);
    REQUIRE(in_span(c, Mat::identity(2)));
    REQUIRE(in_span(c, rot));
  }
  SECTION("dimension mismatch is rejected") {
    REQUIRE_THROWS_AS(commutant_basis({Mat::identity(3)}, 2), std::invalid_argument);
  }
}

TEST_CASE("commutant is an algebra: closed under products") {
  std::mt19937 rng(7);
  Mat g1 = Mat::of({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  Mat g2 = Mat::of({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  for (auto gens : {std::vector<Mat>{g1}, std::vector<Mat>{g1, g2},
                    std::vector<Mat>{random_matrix(rng, 3, 3)}}) {
    auto c = commutant_basis(gens, 3);
    REQUIRE(in_span(c, Mat::identity(3)));
    for (const auto& x : c)
      for (const auto& y : c) REQUIRE(in_span(c, x * y));
  }
}

TEST_CASE("kronecker product conventions") {
  Mat M = Mat::of({{1, 2}, {3, 4}});
  SECTION("identity tensor gives a block diagonal") {
    Mat K = kronecker(Mat::identity(2), M);
    REQUIRE(K.rows() == 4);
    REQUIRE(K.at(0, 0) == 1);
    REQUIRE(K.at(0, 1) == 2);
    REQUIRE(K.at(2, 2) == 1);
    REQUIRE(K.at(0, 2) == 0);
    REQUIRE(K.at(2, 0) == 0);
  }
  SECTION("1x1 factor is a scalar multiple") {
    Mat c(1, 1);
    c.at(0, 0) = Rational(3, 2);
    REQUIRE(kronecker(c, M) == M * Rational(3, 2));
  }
  SECTION("shape law") {
    std::mt19937 rng(3);
    Mat A = random_matrix(rng, 2, 3), B = random_matrix(rng, 4, 5);
    Mat K = kronecker(A, B);
    REQUIRE(K.rows() == 8);
    REQUIRE(K.cols() == 15);
  }
  SECTION("mixed product property") {
    std::mt19937 rng(11);
    Mat A = random_matrix(rng, 2, 3), B = random_matrix(rng, 3, 2);
    Mat C = random_matrix(rng, 3, 2), D = random_matrix(rng, 2, 4);
    REQUIRE(kronecker(A, B) * kronecker(C, D) == kronecker(A * C, B * D));
  }
}

TEST_CASE("solve_in_span recovers exact coefficients") {
  std::mt19937 rng(99);
  Mat b1 = random_matrix(rng, 2, 2), b2 = random_matrix(rng, 2, 2);
  if (span_rank({b1, b2}) == 2) {
    Mat target = b1 * Rational(2, 3) - b2 * Rational(5, 1);
    auto c = solve_in_span({b1, b2}, target);
    REQUIRE(c.has_value());
    REQUIRE((*c)[0] == Rational(2, 3));
    REQUIRE((*c)[1] == Rational(-5));
  }
  REQUIRE_FALSE(solve_in_span({Mat::identity(2)}, Mat::of({{0, 1}, {0, 0}})).has_value());
}
