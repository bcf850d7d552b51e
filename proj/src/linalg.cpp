#include "rho/linalg.hpp"

#include <fmt/format.h>

namespace rho {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RrefResult rref(const RationalMatrix& input) {
  RationalMatrix m = input;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows; ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Rational inv = m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational factor = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const RationalMatrix& m) { return int(rref(m).pivots.size()); }

SubspaceBasis kernel_basis(const RationalMatrix& m) {
  RrefResult r = rref(m);
  SubspaceBasis basis;
  basis.ambient_dim = m.cols;
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    RationalVector v(m.cols);
    v[j] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix.at(int(i), j);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (int(b.size()) != m.rows)
    throw Error(fmt::format("solve: rhs has length {}, expected {}", b.size(), m.rows));
  RationalMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  RrefResult r = rref(aug);
  for (int p : r.pivots)
    if (p == m.cols) return std::nullopt;
  RationalVector x(m.cols);
  for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.matrix.at(int(i), m.cols);
  return x;
}

SubspaceBasis complement_basis(const SubspaceBasis& sub) {
  for (const auto& v : sub.vectors)
    if (int(v.size()) != sub.ambient_dim)
      throw Error("complement_basis: vector length differs from ambient dimension");
  RationalMatrix m(int(sub.vectors.size()), sub.ambient_dim);
  for (size_t i = 0; i < sub.vectors.size(); ++i)
    for (int j = 0; j < sub.ambient_dim; ++j) m.at(int(i), j) = sub.vectors[i][j];
  RrefResult r = rref(m);
  if (int(r.pivots.size()) != int(sub.vectors.size()))
    throw Error("complement_basis: input vectors are linearly dependent");
  std::vector<bool> is_pivot(sub.ambient_dim, false);
  for (int p : r.pivots) is_pivot[p] = true;
  SubspaceBasis out;
  out.ambient_dim = sub.ambient_dim;
  for (int j = 0; j < sub.ambient_dim; ++j) {
    if (is_pivot[j]) continue;
    RationalVector e(sub.ambient_dim);
    e[j] = 1;
    out.vectors.push_back(std::move(e));
  }
  return out;
}

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& v) {
  if (int(v.size()) != m.cols)
    throw Error(fmt::format("mat_vec: vector has length {}, expected {}", v.size(), m.cols));
  RationalVector out(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Rational acc = 0;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) acc += m.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols != b.rows) throw Error("matmul: inner dimensions differ");
  RationalMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

RationalMatrix from_columns(int dim, const std::vector<RationalVector>& cols) {
  RationalMatrix out(dim, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (int(cols[j].size()) != dim) throw Error("from_columns: column length mismatch");
    for (int i = 0; i < dim; ++i) out.at(i, int(j)) = cols[j][i];
  }
  return out;
}

bool RankTracker::insert(const RationalVector& v) {
  RationalVector r = reduce(v);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (r[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Rational inv = r[pivot];
  for (int j = pivot; j < dim_; ++j) r[j] /= inv;
  for (auto& [p, row] : rows_) {
    if (row[pivot] == 0) continue;
    Rational f = row[pivot];
    for (int j = 0; j < dim_; ++j) row[j] -= f * r[j];
  }
  auto it = rows_.begin();
  while (it != rows_.end() && it->first < pivot) ++it;
  rows_.insert(it, {pivot, std::move(r)});
  return true;
}

RationalVector RankTracker::reduce(const RationalVector& v) const {
  if (int(v.size()) != dim_) throw Error("RankTracker: vector length mismatch");
  RationalVector r = v;
  for (const auto& [p, row] : rows_) {
    if (r[p] == 0) continue;
    Rational f = r[p];
    for (int j = 0; j < dim_; ++j) r[j] -= f * row[j];
  }
  return r;
}

QuotientSpace::QuotientSpace(const RationalMatrix& d_in, const RationalMatrix& d_out) {
  ambient_dim_ = d_in.rows;
  if (d_out.cols != ambient_dim_) throw Error("QuotientSpace: matrix shapes disagree");
  SubspaceBasis cycles = kernel_basis(d_out);
  cycles_dim_ = int(cycles.vectors.size());
  RankTracker tracker(ambient_dim_);
  for (int j = 0; j < d_in.cols; ++j) {
    RationalVector col(ambient_dim_);
    for (int i = 0; i < ambient_dim_; ++i) col[i] = d_in.at(i, j);
    if (tracker.insert(col)) boundary_basis_.push_back(std::move(col));
  }
  for (auto& z : cycles.vectors)
    if (tracker.insert(z)) representatives_.push_back(std::move(z));
}

RationalVector QuotientSpace::class_coords(const RationalVector& v) const {
  std::vector<RationalVector> cols = boundary_basis_;
  cols.insert(cols.end(), representatives_.begin(), representatives_.end());
  auto x = solve(from_columns(ambient_dim_, cols), v);
  if (!x) throw Error("QuotientSpace::class_coords: vector is not a cycle of this space");
  RationalVector out(representatives_.size());
  for (size_t i = 0; i < representatives_.size(); ++i) out[i] = (*x)[boundary_basis_.size() + i];
  return out;
}

}  // namespace rho
