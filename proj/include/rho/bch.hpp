#pragma once

#include "rho/lie.hpp"

namespace rho {

// A truncated free Lie algebra element regarded as a group element under the
// Baker-Campbell-Hausdorff product. Houses the Malcev completion of the free
// group at class class_bound.
struct MalcevElement {
  LieElement value;

  bool operator==(const MalcevElement&) const = default;
};

// Universal BCH polynomial log(exp(a) exp(b)) through the class bound, in Hall
// coordinates on two symbols.
struct BchTable {
  int class_bound = 0;
  LieElement poly;  // num_generators == 2, symbols a (0) and b (1)
};

/// Cached per class bound; computed in the truncated free associative algebra
/// and rewritten into the Hall basis by a linear solve, so a table that cannot
/// be expressed in Lie terms fails loudly instead of silently.
const BchTable& bch_table(int class_bound);

/// Substitutes the arguments into a two-symbol Lie polynomial via nested
/// brackets (not multilinear: the polynomial is evaluated, not linearized).
LieElement eval_lie_poly(const LieElement& poly, const std::vector<LieElement>& args);

MalcevElement malcev(const LieElement& value);
MalcevElement malcev_zero(int num_generators, int class_bound);

/// g * h by the BCH formula at the shared class bound.
MalcevElement mul(const MalcevElement& g, const MalcevElement& h);

MalcevElement inv(const MalcevElement& g);

/// q-th power; scalar action on Lie coordinates, agreeing with iterated BCH
/// products for integer q.
MalcevElement rational_power(const MalcevElement& g, const Rational& q);

/// Dimensions of gr_i of the free rational n-nilpotent group on k generators,
/// i = 1..class_bound (equal to dim L^i).
std::vector<int> associated_graded_dims(int class_bound, int num_generators);

}  // namespace rho
