#pragma once

#include <optional>

#include "rho/bch.hpp"

namespace rho {

// Freely reduced word over x1..xk; letters are (generator index, exponent +-1).
struct FreeGroupWord {
  std::vector<std::pair<int, int>> letters;

  bool is_identity() const { return letters.empty(); }
  bool operator==(const FreeGroupWord&) const = default;
};

/// Parses "x1 x2^-1 x1"; exponents other than +-1 expand to repeated letters,
/// free reduction is applied.
FreeGroupWord parse_word(const std::string& text);

std::string render_word(const FreeGroupWord& w);

FreeGroupWord concat(const FreeGroupWord& u, const FreeGroupWord& v);
FreeGroupWord inverse(const FreeGroupWord& w);

/// Smallest generator count covering every letter of w (at least 1).
int min_generators(const FreeGroupWord& w);

using TruncatedSeries = AssocSeries;

/// Magnus expansion x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i + X_i^2 - ...,
/// truncated at total degree n.
TruncatedSeries magnus(const FreeGroupWord& w, int num_generators, int n);

/// Malcev log coordinates of the stage-n completion: the word is sent through
/// x_i -> exp(X_i) and the logarithm is rewritten into Hall coordinates by a
/// linear solve. The map is a group homomorphism onto (L/L_{n+1}, *). A
/// logarithm outside the Hall span signals an implementation bug and throws.
MalcevElement log_coordinates(const FreeGroupWord& w, int num_generators, int n);

/// Smallest i with a nonzero weight-i part of the log coordinates, i.e. the
/// deepest rational lower-central stage visible at precision n; nullopt when
/// the word is trivial through class n ("exceeds n").
std::optional<int> lcs_weight(const FreeGroupWord& w, int num_generators, int n);

/// The group law on stage-n completion coordinates; class-n coordinates are
/// the n-th stage of the completion tower.
MalcevElement completion_mul(const MalcevElement& a, const MalcevElement& b);

}  // namespace rho
