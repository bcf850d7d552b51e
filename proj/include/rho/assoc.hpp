#pragma once

#include <map>

#include "rho/lyndon.hpp"
#include "rho/rational.hpp"

namespace rho {

// Element of the free associative algebra on num_symbols symbols, truncated at
// total degree degree_bound. Keys are words in the symbols; the empty word is
// the unit.
struct AssocSeries {
  int num_symbols = 0;
  int degree_bound = 0;
  std::map<Word, Rational> coeffs;  // no zero coefficients

  bool is_zero() const { return coeffs.empty(); }
  Rational constant_term() const;
  bool operator==(const AssocSeries&) const = default;
};

AssocSeries assoc_zero(int num_symbols, int degree_bound);
AssocSeries assoc_constant(int num_symbols, int degree_bound, const Rational& c);
AssocSeries assoc_symbol(int num_symbols, int degree_bound, int index);

AssocSeries add(const AssocSeries& a, const AssocSeries& b);
AssocSeries sub(const AssocSeries& a, const AssocSeries& b);
AssocSeries scale(const AssocSeries& a, const Rational& c);
AssocSeries mul(const AssocSeries& a, const AssocSeries& b);

/// exp of a series with zero constant term (finite by truncation).
AssocSeries exp_series(const AssocSeries& a);

/// log of a series with constant term 1.
AssocSeries log_series(const AssocSeries& a);

/// Terms of the embedding of the standard bracketing of a Lyndon word under
/// [a,b] -> ab - ba; homogeneous of degree |w|. Cached, thread-safe.
const std::map<Word, Rational>& hall_word_expansion_terms(const Word& lyndon_word);

AssocSeries hall_word_expansion(const Word& lyndon_word, int num_symbols, int degree_bound);

/// Projection of a homogeneous component onto weight i (words of length i).
std::map<Word, Rational> weight_terms(const AssocSeries& a, int i);

}  // namespace rho
