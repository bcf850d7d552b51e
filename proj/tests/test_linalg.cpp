#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rho/linalg.hpp"
#include "testutil.hpp"

using namespace rho;

namespace {

RationalMatrix from_rows(std::vector<std::vector<long>> rows) {
  RationalMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rat(rows[i][j]);
  return m;
}

RationalMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (auto& e : m.entries) e = testutil::random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("rref identity") {
  auto m = RationalMatrix::identity(2);
  auto r = rref(m);
  CHECK(r.matrix == m);
  CHECK(r.pivots == std::vector<int>{0, 1});
}

TEST_CASE("rref rank-1 matrix") {
  auto r = rref(from_rows({{1, 2}, {2, 4}}));
  CHECK(r.matrix == from_rows({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("rref swaps rows") {
  auto r = rref(from_rows({{0, 1}, {1, 0}}));
  CHECK(r.matrix == RationalMatrix::identity(2));
  CHECK(r.pivots == std::vector<int>{0, 1});
}

TEST_CASE("kernel of identity is empty") {
  CHECK(kernel_basis(RationalMatrix::identity(3)).vectors.empty());
}

TEST_CASE("kernel of zero 2x3 matrix has size 3") {
  CHECK(kernel_basis(RationalMatrix(2, 3)).vectors.size() == 3);
}

TEST_CASE("kernel of [[1,1,0]] is 2-dimensional") {
  auto k = kernel_basis(from_rows({{1, 1, 0}}));
  CHECK(k.vectors.size() == 2);
  for (const auto& v : k.vectors) CHECK(v[0] + v[1] == 0);
}

TEST_CASE("solve with identity returns rhs") {
  RationalVector b = {rat(3), rat(-1, 2)};
  auto x = solve(RationalMatrix::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);
}

TEST_CASE("solve detects inconsistency") {
  CHECK(!solve(from_rows({{1, 2}, {2, 4}}), {rat(1), rat(3)}).has_value());
}

TEST_CASE("solve 2x = 1") {
  auto x = solve(from_rows({{2}}), {rat(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(1, 2));
}

TEST_CASE("solve rejects dimension mismatch") {
  CHECK_THROWS_AS(solve(RationalMatrix::identity(2), {rat(1)}), Error);
}

TEST_CASE("complement of full space is empty") {
  SubspaceBasis full{2, {{rat(1), rat(0)}, {rat(0), rat(1)}}};
  CHECK(complement_basis(full).vectors.empty());
}

TEST_CASE("complement of empty basis is the standard basis") {
  SubspaceBasis empty{2, {}};
  auto c = complement_basis(empty);
  CHECK(c.vectors.size() == 2);
}

TEST_CASE("complement of a line in dim 2") {
  SubspaceBasis line{2, {{rat(1), rat(1)}}};
  auto c = complement_basis(line);
  REQUIRE(c.vectors.size() == 1);
  RationalMatrix m(2, 2);
  m.at(0, 0) = rat(1);
  m.at(1, 0) = rat(1);
  m.at(0, 1) = c.vectors[0][0];
  m.at(1, 1) = c.vectors[0][1];
  CHECK(rank(m) == 2);
}

TEST_CASE("complement rejects dependent input") {
  SubspaceBasis bad{2, {{rat(1), rat(1)}, {rat(2), rat(2)}}};
  CHECK_THROWS_AS(complement_basis(bad), Error);
}

TEST_CASE("random matrices: rref idempotent, rank = pivots, kernel annihilated") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    auto m = random_matrix(rng, dim(rng), dim(rng));
    auto r = rref(m);
    CHECK(rref(r.matrix).matrix == r.matrix);
    CHECK(int(r.pivots.size()) == rank(m));
    for (size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
    for (const auto& k : kernel_basis(m).vectors) CHECK(is_zero_vector(mat_vec(m, k)));
  }
}

TEST_CASE("solve round-trip on random systems") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    int rows = dim(rng), cols = dim(rng);
    auto m = random_matrix(rng, rows, cols);
    RationalVector v(cols);
    for (auto& x : v) x = testutil::random_rational(rng);
    auto b = mat_vec(m, v);
    auto w = solve(m, b);
    REQUIRE(w.has_value());
    CHECK(mat_vec(m, *w) == b);
  }
}

TEST_CASE("quotient space dims and class coordinates") {
  // H = ker(0) / im(column (1,1)) inside Q^2: one-dimensional
  RationalMatrix d_in(2, 1);
  d_in.at(0, 0) = rat(1);
  d_in.at(1, 0) = rat(1);
  RationalMatrix d_out(0, 2);
  QuotientSpace h(d_in, d_out);
  CHECK(h.dim() == 1);
  RationalVector v = {rat(2), rat(5)};  // = 2*(1,1) + 3*e2-ish
  auto coords = h.class_coords(v);
  REQUIRE(coords.size() == 1);
  CHECK(coords[0] != 0);
  // boundary has trivial class
  CHECK(h.class_coords({rat(1), rat(1)}) == RationalVector{rat(0)});
}
