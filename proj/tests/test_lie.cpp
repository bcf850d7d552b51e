#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rho/lie.hpp"
#include "rho/linalg.hpp"
#include "testutil.hpp"

using namespace rho;

TEST_CASE("hall basis: generators at class 1") {
  const auto& b = hall_basis(2, 1);
  CHECK(b.weight(1) == std::vector<Word>{{0}, {1}});
}

TEST_CASE("hall basis: single weight-2 word") {
  const auto& b = hall_basis(2, 2);
  CHECK(b.weight(2) == std::vector<Word>{{0, 1}});
}

TEST_CASE("hall basis dims (2,4) = 2,1,2,3") {
  const auto& b = hall_basis(2, 4);
  CHECK(b.dim(1) == 2);
  CHECK(b.dim(2) == 1);
  CHECK(b.dim(3) == 2);
  CHECK(b.dim(4) == 3);
}

TEST_CASE("hall basis dims match the Witt oracle for k <= 3, i <= 6") {
  for (int k = 1; k <= 3; ++k) {
    const auto& b = hall_basis(k, 6);
    for (int i = 1; i <= 6; ++i) CHECK(b.dim(i) == testutil::witt_dimension(k, i));
  }
}

TEST_CASE("lyndon words are Lyndon and lex-sorted") {
  auto words = lyndon_words(3, 5);
  for (size_t i = 0; i < words.size(); ++i) {
    CHECK(is_lyndon(words[i]));
    if (i > 0) CHECK(words[i - 1] < words[i]);
  }
}

TEST_CASE("bracket of a generator with itself is zero") {
  auto x = lie_generator(2, 3, 0);
  CHECK(bracket(x, x).is_zero());
}

TEST_CASE("bracket of the two generators is the weight-2 Hall word") {
  auto x = lie_generator(2, 2, 0);
  auto y = lie_generator(2, 2, 1);
  CHECK(bracket(x, y) == lie_term(2, 2, {0, 1}, 1));
  CHECK(bracket(y, x) == lie_term(2, 2, {0, 1}, -1));
}

TEST_CASE("[y,[x,y]] equals -[[x,y],y], cross-checked against the solve oracle") {
  auto x = lie_generator(2, 3, 0);
  auto y = lie_generator(2, 3, 1);
  auto got = bracket(y, bracket(x, y));
  CHECK(got == lie_term(2, 3, {0, 1, 1}, -1));

  // independent route: associative commutator + linear solve
  auto ax = assoc_from_lie(x, 3);
  auto ay = assoc_from_lie(y, 3);
  auto axy = sub(mul(ax, ay), mul(ay, ax));
  auto comm = sub(mul(ay, axy), mul(axy, ay));
  CHECK(lie_from_assoc_solve(comm, 2, 3) == got);
}

TEST_CASE("add and scale behave linearly") {
  auto x = lie_generator(2, 2, 0);
  CHECK(scale(x, 0).is_zero());
  CHECK(add(x, x) == scale(x, 2));
  auto xy = lie_term(2, 2, {0, 1}, 1);
  CHECK(scale(xy, rat(1, 2)) == lie_term(2, 2, {0, 1}, rat(1, 2)));
}

TEST_CASE("weight components decompose the element") {
  auto e = add(lie_generator(2, 3, 0), lie_term(2, 3, {0, 1}, 1));
  CHECK(weight_component(e, 2) == lie_term(2, 3, {0, 1}, 1));
  CHECK(weight_component(lie_generator(2, 3, 0), 3).is_zero());
  std::mt19937 rng(5);
  auto a = testutil::random_lie(rng, 2, 4);
  LieElement sum = lie_zero(2, 4);
  for (int i = 1; i <= 4; ++i) sum = add(sum, weight_component(a, i));
  CHECK(sum == a);
  CHECK_THROWS_AS(weight_component(a, 5), Error);
  CHECK_THROWS_AS(weight_component(a, 0), Error);
}

TEST_CASE("mismatched bounds are rejected") {
  CHECK_THROWS_AS(bracket(lie_generator(2, 2, 0), lie_generator(2, 3, 1)), Error);
  CHECK_THROWS_AS(add(lie_generator(2, 2, 0), lie_generator(3, 2, 0)), Error);
}

TEST_CASE("antisymmetry on random elements") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = testutil::random_lie(rng, 2, 4);
    auto b = testutil::random_lie(rng, 2, 4);
    CHECK(bracket(a, b) == neg(bracket(b, a)));
  }
}

TEST_CASE("Jacobi identity on random triples") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    auto a = testutil::random_lie(rng, 2, 4);
    auto b = testutil::random_lie(rng, 2, 4);
    auto c = testutil::random_lie(rng, 2, 4);
    auto sum = add(add(bracket(a, bracket(b, c)), bracket(b, bracket(c, a))),
                   bracket(c, bracket(a, b)));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("Hall-word expansions are linearly independent") {
  for (int k = 2; k <= 3; ++k) {
    for (int i = 1; i <= 4; ++i) {
      const auto& words = hall_basis(k, 4).weight(i);
      // index all length-i words
      std::map<Word, int> rows;
      Word w(i, 0);
      while (true) {
        rows.emplace(w, int(rows.size()));
        int p = i - 1;
        while (p >= 0 && w[p] == k - 1) w[p--] = 0;
        if (p < 0) break;
        ++w[p];
      }
      RationalMatrix m(int(rows.size()), int(words.size()));
      for (size_t j = 0; j < words.size(); ++j)
        for (const auto& [x, c] : hall_word_expansion_terms(words[j]))
          m.at(rows.at(x), int(j)) = c;
      CHECK(rank(m) == int(words.size()));
    }
  }
}

TEST_CASE("bracket agrees with the associative commutator after projection back") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 12; ++trial) {
    auto a = testutil::random_lie(rng, 2, 4);
    auto b = testutil::random_lie(rng, 2, 4);
    auto lhs = bracket(a, b);
    auto pa = assoc_from_lie(a, 4);
    auto pb = assoc_from_lie(b, 4);
    auto comm = sub(mul(pa, pb), mul(pb, pa));
    CHECK(lie_from_assoc_solve(comm, 2, 4) == lhs);
  }
}

TEST_CASE("triangular and solve conversions agree") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 12; ++trial) {
    auto a = testutil::random_lie(rng, 3, 4);
    auto s = assoc_from_lie(a, 4);
    CHECK(lie_from_assoc_triangular(s, 3, 4) == a);
    CHECK(lie_from_assoc_solve(s, 3, 4) == a);
  }
}

TEST_CASE("non-primitive series are rejected by both conversions") {
  // X*X is not a Lie element
  auto x = assoc_symbol(1, 2, 0);
  auto xx = mul(x, x);
  CHECK_THROWS_AS(lie_from_assoc_triangular(xx, 1, 2), Error);
  CHECK_THROWS_AS(lie_from_assoc_solve(xx, 1, 2), Error);
}

TEST_CASE("rendering and parsing round-trip") {
  auto names = default_names(2);
  auto e = add(lie_generator(2, 3, 0),
               add(lie_term(2, 3, {0, 1}, rat(1, 2)), lie_term(2, 3, {0, 0, 1}, rat(-2))));
  auto text = render(e, names);
  CHECK(text == "x1 + 1/2*[x1,x2] - 2*[x1,[x1,x2]]");
  CHECK(parse_lie_element(2, 3, text, names) == e);
  CHECK(render(lie_zero(2, 3), names) == "0");
}

TEST_CASE("parser normalizes non-standard bracketings") {
  auto names = default_names(2);
  // [[x1,x2],x1] = -[x1,[x1,x2]]
  auto e = parse_lie_element(2, 3, "[[x1,x2],x1]", names);
  CHECK(e == lie_term(2, 3, {0, 0, 1}, -1));
}

TEST_CASE("truncate_class projects the tower") {
  std::mt19937 rng(46);
  auto a = testutil::random_lie(rng, 2, 4);
  auto t = truncate_class(a, 2);
  CHECK(t.class_bound == 2);
  for (const auto& [w, c] : t.coeffs) CHECK(w.size() <= 2);
}
