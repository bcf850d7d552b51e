#pragma once

#include <optional>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;  // row-major

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), entries(size_t(r) * c) {}

  Rational& at(int i, int j) { return entries[size_t(i) * cols + j]; }
  const Rational& at(int i, int j) const { return entries[size_t(i) * cols + j]; }

  static RationalMatrix identity(int n);

  bool operator==(const RationalMatrix&) const = default;
};

using RationalVector = std::vector<Rational>;

struct SubspaceBasis {
  int ambient_dim = 0;
  std::vector<RationalVector> vectors;  // linearly independent
};

struct RrefResult {
  RationalMatrix matrix;
  std::vector<int> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const RationalMatrix& m);
int rank(const RationalMatrix& m);

/// Echelon basis of {v : m v = 0}; one vector per non-pivot column.
SubspaceBasis kernel_basis(const RationalMatrix& m);

/// A solution of m x = b (free variables set to 0), or nullopt if b is not in
/// the column space. Throws on dimension mismatch.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

/// Standard basis vectors at the non-pivot coordinates of sub, so that
/// sub + result spans the ambient space.
SubspaceBasis complement_basis(const SubspaceBasis& sub);

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& v);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& m);
RationalMatrix from_columns(int dim, const std::vector<RationalVector>& cols);

inline bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Incremental row-space tracker: feeds vectors one by one, keeping a reduced
/// echelon set. insert() reports whether the vector enlarged the span.
class RankTracker {
 public:
  explicit RankTracker(int dim) : dim_(dim) {}
  bool insert(const RationalVector& v);
  RationalVector reduce(const RationalVector& v) const;
  int rank() const { return int(rows_.size()); }

 private:
  int dim_;
  std::vector<std::pair<int, RationalVector>> rows_;  // (pivot, row), pivot ascending
};

/// H = ker(d_out) / im(d_in) inside Q^dim, with deterministic echelon
/// representatives. d_in maps into the space (dim x p), d_out maps out of it
/// (q x dim). Shared by cdga cohomology, simplicial cochains and A_PL ranks.
class QuotientSpace {
 public:
  QuotientSpace(const RationalMatrix& d_in, const RationalMatrix& d_out);

  int dim() const { return int(representatives_.size()); }
  int cycles_dim() const { return cycles_dim_; }
  const std::vector<RationalVector>& representatives() const { return representatives_; }

  /// Coordinates of [v] in the representative basis; v must be a cycle.
  RationalVector class_coords(const RationalVector& v) const;

 private:
  int ambient_dim_;
  int cycles_dim_;
  std::vector<RationalVector> boundary_basis_;  // independent columns of d_in
  std::vector<RationalVector> representatives_;
};

}  // namespace rho
