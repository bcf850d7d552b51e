#pragma once

#include <map>

#include "rho/assoc.hpp"
#include "rho/lyndon.hpp"

namespace rho {

// Element of the free Lie algebra on num_generators generators over Q,
// truncated at bracket weight class_bound, i.e. an element of L / L_{n+1}.
// Coefficients live on Lyndon words (standard-bracketing Hall basis).
struct LieElement {
  int num_generators = 0;
  int class_bound = 0;
  std::map<Word, Rational, WeightLexLess> coeffs;  // no zero coefficients

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const LieElement&) const = default;
};

LieElement lie_zero(int num_generators, int class_bound);
LieElement lie_generator(int num_generators, int class_bound, int index);
LieElement lie_term(int num_generators, int class_bound, const Word& w, const Rational& c);

LieElement add(const LieElement& a, const LieElement& b);
LieElement sub(const LieElement& a, const LieElement& b);
LieElement scale(const LieElement& a, const Rational& c);
LieElement neg(const LieElement& a);

/// [a,b] in Hall normal form; components of weight > class_bound are dropped.
LieElement bracket(const LieElement& a, const LieElement& b);

/// Projection onto the weight-i graded piece. Throws if i is out of range.
LieElement weight_component(const LieElement& a, int i);

/// Smallest weight carrying a nonzero coefficient; 0 for the zero element.
int lowest_weight(const LieElement& a);

/// Tower projection L/L_{n+1} -> L/L_{m+1} for m <= n.
LieElement truncate_class(const LieElement& a, int new_bound);

/// Koszul-free embedding into the associative algebra, sum of coefficient
/// times Hall-word expansion.
AssocSeries assoc_from_lie(const LieElement& a, int degree_bound);

/// Rewrites a primitive associative series into Hall coordinates by repeatedly
/// stripping the lexicographically least word of each weight (the expansion of
/// a Lyndon word is that word plus lexicographically larger ones). Throws if
/// the series is not a Lie element.
LieElement lie_from_assoc_triangular(const AssocSeries& s, int num_generators, int class_bound);

/// Same conversion by solving a linear system against the Hall-word expansions
/// weight by weight. Independent code path, used where a self-verifying route
/// is wanted; throws if no solution exists.
LieElement lie_from_assoc_solve(const AssocSeries& s, int num_generators, int class_bound);

/// Folds an arbitrary bracketing into Hall normal form.
LieElement from_tree(int num_generators, int class_bound, const BracketTree& t);

std::string render(const LieElement& a, const std::vector<std::string>& names);

/// Parses sums like "x1 + 1/2*[x1,x2] - 2*[x2,[x1,x2]]"; bracketings need not
/// be standard, they are normalized on the way in.
LieElement parse_lie_element(int num_generators, int class_bound, const std::string& text,
                             const std::vector<std::string>& names);

}  // namespace rho
