#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rho/linalg.hpp"
#include "rho/words.hpp"
#include "testutil.hpp"

using namespace rho;

namespace {

FreeGroupWord random_word(std::mt19937& rng, int k, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, k - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  FreeGroupWord w;
  int target = len(rng);
  while (int(w.letters.size()) < target) {
    FreeGroupWord letter;
    letter.letters.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    w = concat(w, letter);
  }
  return w;
}

// group-commutator word realizing a bracketing: c([u,v]) = c(u) c(v) c(u)^-1 c(v)^-1
FreeGroupWord commutator_word(const Word& w) {
  if (w.size() == 1) {
    FreeGroupWord f;
    f.letters.emplace_back(w[0], 1);
    return f;
  }
  auto [u, v] = standard_factorization(w);
  auto cu = commutator_word(u);
  auto cv = commutator_word(v);
  return concat(concat(cu, cv), concat(inverse(cu), inverse(cv)));
}

}  // namespace

TEST_CASE("word parsing applies free reduction") {
  CHECK(parse_word("x1 x1^-1").is_identity());
  CHECK(parse_word("x1^3").letters.size() == 3);
  CHECK(parse_word("x2 x1^-2 x1 x1 x2^-1").is_identity());
  CHECK(render_word(parse_word("x1 x1 x2^-1")) == "x1^2 x2^-1");
  CHECK(render_word(FreeGroupWord{}) == "1");
  CHECK_THROWS_AS(parse_word("y1"), Error);
  CHECK_THROWS_AS(parse_word("x1^a"), Error);
}

TEST_CASE("magnus of the empty word is 1") {
  auto s = magnus(FreeGroupWord{}, 2, 2);
  CHECK(s == assoc_constant(2, 2, 1));
}

TEST_CASE("magnus of a generator is 1 + X") {
  auto s = magnus(parse_word("x1"), 2, 2);
  CHECK(s == add(assoc_constant(2, 2, 1), assoc_symbol(2, 2, 0)));
}

TEST_CASE("magnus of the commutator is 1 + XY - YX at degree 2") {
  auto s = magnus(parse_word("x1 x2 x1^-1 x2^-1"), 2, 2);
  auto x = assoc_symbol(2, 2, 0);
  auto y = assoc_symbol(2, 2, 1);
  auto expected = add(assoc_constant(2, 2, 1), sub(mul(x, y), mul(y, x)));
  CHECK(s == expected);
}

TEST_CASE("magnus images have constant coefficient 1") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto w = random_word(rng, 2, 6);
    CHECK(magnus(w, 2, 3).constant_term() == 1);
  }
}

TEST_CASE("log coordinates of a generator") {
  for (int n = 1; n <= 4; ++n) {
    auto g = log_coordinates(parse_word("x1"), 2, n);
    CHECK(g.value == lie_generator(2, n, 0));
  }
}

TEST_CASE("log coordinates of the commutator word is [x,y] at n = 2") {
  auto g = log_coordinates(parse_word("x1 x2 x1^-1 x2^-1"), 2, 2);
  CHECK(g.value == lie_term(2, 2, {0, 1}, 1));
}

TEST_CASE("log coordinates of x^2 is 2x at any precision") {
  for (int n = 1; n <= 4; ++n) {
    auto g = log_coordinates(parse_word("x1 x1"), 2, n);
    CHECK(g.value == scale(lie_generator(2, n, 0), 2));
  }
}

TEST_CASE("lcs weights") {
  CHECK(lcs_weight(parse_word("x1"), 2, 4) == 1);
  CHECK(lcs_weight(parse_word("x1 x2 x1^-1 x2^-1"), 2, 4) == 2);
  // [[x,y],y] as a group word
  CHECK(lcs_weight(commutator_word({0, 1, 1}), 2, 4) == 3);
  CHECK(!lcs_weight(FreeGroupWord{}, 2, 4).has_value());
}

TEST_CASE("log is a homomorphism onto the BCH group") {
  std::mt19937 rng(12);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      auto u = random_word(rng, 2, 6);
      auto v = random_word(rng, 2, 6);
      auto lhs = log_coordinates(concat(u, v), 2, n);
      auto rhs = completion_mul(log_coordinates(u, 2, n), log_coordinates(v, 2, n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("log of the inverse word is the negative") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto w = random_word(rng, 2, 6);
    CHECK(log_coordinates(inverse(w), 2, 4).value == neg(log_coordinates(w, 2, 4).value));
  }
}

TEST_CASE("graded pieces of commutator-word logs span the Witt dimension") {
  for (int i = 1; i <= 4; ++i) {
    const auto& words = hall_basis(2, 4).weight(i);
    std::vector<RationalVector> rows;
    std::map<Word, int> index;
    for (const Word& w : words) index.emplace(w, int(index.size()));
    for (const Word& w : words) {
      auto g = log_coordinates(commutator_word(w), 2, 4);
      auto piece = weight_component(g.value, i);
      RationalVector row(words.size());
      for (const auto& [hw, c] : piece.coeffs) row[index.at(hw)] = c;
      rows.push_back(std::move(row));
    }
    RankTracker tracker(int(words.size()));
    for (const auto& r : rows) tracker.insert(r);
    CHECK(tracker.rank() == testutil::witt_dimension(2, i));
  }
}

TEST_CASE("tower projections intertwine the product") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = malcev(testutil::random_lie(rng, 2, 4));
    auto b = malcev(testutil::random_lie(rng, 2, 4));
    auto product_then_project = truncate_class(completion_mul(a, b).value, 3);
    auto project_then_product =
        completion_mul(malcev(truncate_class(a.value, 3)), malcev(truncate_class(b.value, 3)));
    CHECK(product_then_project == project_then_product.value);
  }
}

TEST_CASE("identity word maps to 0") {
  CHECK(log_coordinates(FreeGroupWord{}, 2, 3) == malcev_zero(2, 3));
}
