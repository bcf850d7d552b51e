#pragma once

#include <string>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

// A word over generator indices 0..k-1. Lyndon words with their standard
// bracketing serve as the Hall basis of the free Lie algebra.
using Word = std::vector<int>;

bool is_lyndon(const Word& w);

/// All Lyndon words over k letters of length <= max_weight, in lexicographic
/// order (Duval's generation).
std::vector<Word> lyndon_words(int num_generators, int max_weight);

/// Standard factorization w = u v with v the lexicographically least proper
/// suffix; both factors are Lyndon. Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Weight-major order: by length first, then lexicographic.
struct WeightLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct HallBasis {
  int num_generators = 0;
  int class_bound = 0;
  std::vector<std::vector<Word>> by_weight;  // by_weight[i-1]: weight-i words

  const std::vector<Word>& weight(int i) const;
  int dim(int i) const { return int(weight(i).size()); }
};

/// Basis of L^1 .. L^class_bound, cached per (k, n). Thread-safe.
const HallBasis& hall_basis(int num_generators, int class_bound);

std::vector<std::string> default_names(int num_generators);  // x1, x2, ...

/// Nested-bracket rendering of the standard bracketing, e.g. "[x1,[x1,x2]]".
std::string render_hall_word(const Word& w, const std::vector<std::string>& names);

// User-facing bracket expressions are arbitrary binary bracketings; they get
// normalized into the Hall basis by the Lie module.
struct BracketTree {
  int leaf = -1;                      // generator index when children.empty()
  std::vector<BracketTree> children;  // size 2 for a bracket node

  int weight() const;
};

BracketTree hall_word_tree(const Word& w);

/// Parses "name" or "[expr,expr]" with names resolved against `names`.
BracketTree parse_bracket_tree(const std::string& text, const std::vector<std::string>& names);

}  // namespace rho
