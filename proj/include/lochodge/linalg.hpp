#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lochodge/rational.hpp"

namespace lochodge {

// Sparse matrix over Q. Stored entries are nonzero. Column-vector convention:
// a rows x cols matrix maps Q^cols -> Q^rows.
struct RatMatrix {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Rat> m;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c) {}

  void set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw std::out_of_range("RatMatrix::set index");
    if (v == 0)
      m.erase({r, c});
    else
      m[{r, c}] = v;
  }

  Rat at(int r, int c) const {
    auto it = m.find({r, c});
    return it == m.end() ? Rat(0) : it->second;
  }

  bool is_zero() const { return m.empty(); }

  RatMatrix transpose() const {
    RatMatrix t(cols, rows);
    for (const auto& [rc, v] : m) t.m[{rc.second, rc.first}] = v;
    return t;
  }

  // this * other
  RatMatrix mul(const RatMatrix& other) const {
    if (cols != other.rows) throw std::invalid_argument("RatMatrix::mul shapes");
    RatMatrix out(rows, other.cols);
    for (const auto& [rc, v] : m) {
      int i = rc.first, k = rc.second;
      auto lo = other.m.lower_bound({k, 0});
      auto hi = other.m.lower_bound({k + 1, 0});
      for (auto it = lo; it != hi; ++it) {
        Rat& cell = out.m[{i, it->first.second}];
        cell += v * it->second;
        if (cell == 0) out.m.erase({i, it->first.second});
      }
    }
    return out;
  }

  std::vector<Rat> apply(const std::vector<Rat>& x) const {
    if ((int)x.size() != cols) throw std::invalid_argument("RatMatrix::apply size");
    std::vector<Rat> y(rows, Rat(0));
    for (const auto& [rc, v] : m) y[rc.first] += v * x[rc.second];
    return y;
  }

  static RatMatrix identity(int n) {
    RatMatrix e(n, n);
    for (int i = 0; i < n; ++i) e.m[{i, i}] = 1;
    return e;
  }
};

namespace detail {

// Sparse integer row: sorted (col, value) pairs, values nonzero.
using IntRow = std::vector<std::pair<int, Int>>;

// r := (p * r - f * pr) / div   with exact division (fraction-free update).
inline IntRow row_update(const IntRow& r, const Int& p, const Int& f,
                         const IntRow& pr, const Int& div) {
  IntRow out;
  out.reserve(r.size() + pr.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < pr.size()) {
    if (j == pr.size() || (i < r.size() && r[i].first < pr[j].first)) {
      out.emplace_back(r[i].first, p * r[i].second / div);
      ++i;
    } else if (i == r.size() || pr[j].first < r[i].first) {
      out.emplace_back(pr[j].first, -f * pr[j].second / div);
      ++j;
    } else {
      Int v = (p * r[i].second - f * pr[j].second) / div;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline const Int* row_find(const IntRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& a, int c) { return a.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// Fraction-free Gauss-Jordan on sparse integer rows, pivoting only on columns
// < split. Rows in `rows` may carry extra entries at columns >= split; those
// transform along. Pivot choice: sparsest eligible column, then shortest row.
// Returns the number of pivots (rank of the left block).
inline int eliminate(std::vector<IntRow>& rows, int split) {
  int rank = 0;
  Int prev_piv = 1;
  std::vector<bool> used(rows.size(), false);
  while (true) {
    // count column occupancy among unused rows
    std::map<int, int> colcount;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      for (const auto& [c, v] : rows[i])
        if (c < split) ++colcount[c];
    }
    if (colcount.empty()) break;
    int best_col = -1, best_cnt = 1 << 30;
    for (const auto& [c, cnt] : colcount)
      if (cnt < best_cnt) best_cnt = cnt, best_col = c;
    int piv_row = -1;
    size_t piv_len = SIZE_MAX;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      if (row_find(rows[i], best_col) && rows[i].size() < piv_len) {
        piv_len = rows[i].size();
        piv_row = (int)i;
      }
    }
    const Int piv = *row_find(rows[piv_row], best_col);
    for (size_t i = 0; i < rows.size(); ++i) {
      if ((int)i == piv_row) continue;
      const Int* f = row_find(rows[i], best_col);
      if (!f) continue;
      rows[i] = row_update(rows[i], piv, *f, rows[piv_row], prev_piv);
    }
    used[piv_row] = true;
    prev_piv = piv;
    ++rank;
  }
  return rank;
}

// Clear denominators of a rational row.
inline IntRow scale_row(const std::vector<std::pair<int, Rat>>& row) {
  Int l = 1;
  for (const auto& [c, v] : row) l = boost::multiprecision::lcm(l, den(v));
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, num(v) * (l / den(v)));
  return out;
}

inline std::vector<IntRow> matrix_rows(const RatMatrix& M) {
  std::vector<std::vector<std::pair<int, Rat>>> rows(M.rows);
  for (const auto& [rc, v] : M.m) rows[rc.first].emplace_back(rc.second, v);
  std::vector<IntRow> out(M.rows);
  for (int i = 0; i < M.rows; ++i) out[i] = scale_row(rows[i]);
  return out;
}

}  // namespace detail

// Exact rank over Q by fraction-free elimination.
inline int rank(const RatMatrix& M) {
  auto rows = detail::matrix_rows(M);
  return detail::eliminate(rows, M.cols);
}

// Reduced row echelon form of dense rational rows, in place.
// Returns pivot column per produced row. Zero rows are removed.
inline std::vector<int> rref(std::vector<std::vector<Rat>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  int ncols = (int)rows[0].size();
  int r = 0;
  for (int c = 0; c < ncols && r < (int)rows.size(); ++c) {
    int sel = -1;
    for (int i = r; i < (int)rows.size(); ++i)
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    Rat p = rows[r][c];
    for (int j = c; j < ncols; ++j) rows[r][j] /= p;
    for (int i = 0; i < (int)rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

using Basis = std::vector<std::vector<Rat>>;  // rows span a subspace

// Canonical representation of span(vectors): reduced echelon basis.
inline Basis echelon_basis(Basis vectors) {
  rref(vectors);
  return vectors;
}

// Exact kernel basis in reduced echelon form; dim ker + rank = cols.
inline Basis kernel_basis(const RatMatrix& M) {
  std::vector<std::vector<Rat>> rows(M.rows, std::vector<Rat>(M.cols, Rat(0)));
  for (const auto& [rc, v] : M.m) rows[rc.first][rc.second] = v;
  auto pivots = rref(rows);
  std::vector<bool> is_pivot(M.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Basis ker;
  for (int c = 0; c < M.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(M.cols, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
    ker.push_back(std::move(v));
  }
  return echelon_basis(std::move(ker));
}

// Column space of M, as echelon rows of length M.rows.
inline Basis image_basis(const RatMatrix& M) {
  Basis cols(M.cols, std::vector<Rat>(M.rows, Rat(0)));
  for (const auto& [rc, v] : M.m) cols[rc.second][rc.first] = v;
  return echelon_basis(std::move(cols));
}

// Is span(U) contained in span(V)?
inline bool subspace_leq(const Basis& U, const Basis& V) {
  if (U.empty()) return true;
  Basis v = echelon_basis(V);
  for (const auto& u : U) {
    std::vector<Rat> w = u;
    for (const auto& row : v) {
      int p = -1;
      for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) {
          p = (int)j;
          break;
        }
      if (p < 0 || w[p] == 0) continue;
      Rat f = w[p] / row[p];
      for (size_t j = 0; j < row.size(); ++j) w[j] -= f * row[j];
    }
    for (const auto& x : w)
      if (x != 0) return false;
  }
  return true;
}

inline bool subspace_eq(const Basis& U, const Basis& V) {
  return subspace_leq(U, V) && subspace_leq(V, U);
}

// span(U) intersect span(V): solve a*U = b*V via the kernel of [U^T | -V^T].
inline Basis subspace_intersection(const Basis& U, const Basis& V) {
  if (U.empty() || V.empty()) return {};
  int dim = (int)U[0].size();
  if (!V.empty() && (int)V[0].size() != dim)
    throw std::invalid_argument("subspace_intersection: dimension mismatch");
  int nu = (int)U.size(), nv = (int)V.size();
  RatMatrix M(dim, nu + nv);
  for (int j = 0; j < nu; ++j)
    for (int i = 0; i < dim; ++i)
      if (U[j][i] != 0) M.set(i, j, U[j][i]);
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < dim; ++i)
      if (V[j][i] != 0) M.set(i, nu + j, -V[j][i]);
  Basis ker = kernel_basis(M);
  Basis out;
  for (const auto& ab : ker) {
    std::vector<Rat> w(dim, Rat(0));
    for (int j = 0; j < nu; ++j)
      for (int i = 0; i < dim; ++i) w[i] += ab[j] * U[j][i];
    out.push_back(std::move(w));
  }
  return echelon_basis(std::move(out));
}

// Image of span(U) under M (vectors act as columns).
inline Basis image_of_subspace(const RatMatrix& M, const Basis& U) {
  Basis out;
  for (const auto& u : U) out.push_back(M.apply(u));
  return echelon_basis(std::move(out));
}

// Particular solution of A x = b, if any.
inline std::optional<std::vector<Rat>> solve(const RatMatrix& A,
                                             const std::vector<Rat>& b) {
  std::vector<std::vector<Rat>> rows(A.rows, std::vector<Rat>(A.cols + 1, Rat(0)));
  for (const auto& [rc, v] : A.m) rows[rc.first][rc.second] = v;
  for (int i = 0; i < A.rows; ++i) rows[i][A.cols] = b[i];
  auto pivots = rref(rows);
  std::vector<Rat> x(A.cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == A.cols) return std::nullopt;  // inconsistent
    x[pivots[i]] = rows[i][A.cols];
  }
  return x;
}

// T(ker D) for a large sparse D carried against a small T, without
// materializing the kernel. Rows of the working matrix are the columns of D
// augmented by the columns of T; eliminating the D-block leaves the image
// spanned by the carried parts of the zero rows.
inline Basis image_through_kernel(const RatMatrix& D, const RatMatrix& T) {
  if (D.cols != T.cols) throw std::invalid_argument("image_through_kernel shapes");
  int split = D.rows;
  std::vector<std::vector<std::pair<int, Rat>>> aug(D.cols);
  for (const auto& [rc, v] : D.m) aug[rc.second].emplace_back(rc.first, v);
  for (const auto& [rc, v] : T.m) aug[rc.second].emplace_back(split + rc.first, v);
  std::vector<detail::IntRow> rows(D.cols);
  for (int j = 0; j < D.cols; ++j) {
    std::sort(aug[j].begin(), aug[j].end());
    rows[j] = detail::scale_row(aug[j]);
  }
  detail::eliminate(rows, split);
  Basis out;
  for (const auto& r : rows) {
    if (r.empty()) continue;
    if (r.front().first < split) continue;  // pivot row of the D-block
    std::vector<Rat> w(T.rows, Rat(0));
    for (const auto& [c, v] : r) w[c - split] = Rat(v);
    out.push_back(std::move(w));
  }
  return echelon_basis(std::move(out));
}

// A finite cochain complex of Q-vector spaces: spaces 0..L with differentials
// d[i] : space i -> space i+1. Composition is checked exactly on construction.
struct FiniteComplex {
  std::vector<int> dims;
  std::vector<RatMatrix> d;  // d[i] has shape dims[i+1] x dims[i]

  FiniteComplex() = default;
  FiniteComplex(std::vector<int> dims_, std::vector<RatMatrix> d_)
      : dims(std::move(dims_)), d(std::move(d_)) {
    if (d.size() + 1 != dims.size())
      throw std::invalid_argument("FiniteComplex: need one differential per step");
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i].rows != dims[i + 1] || d[i].cols != dims[i])
        throw std::invalid_argument("FiniteComplex: differential shape mismatch");
    for (size_t i = 0; i + 1 < d.size(); ++i)
      if (!d[i + 1].mul(d[i]).is_zero())
        throw std::invalid_argument("FiniteComplex: d o d != 0");
  }

  int length() const { return (int)dims.size() - 1; }

  int cohomology_dim(int q) const {
    if (q < 0 || q >= (int)dims.size()) throw std::out_of_range("cohomology_dim");
    int rank_out = q < (int)d.size() ? rank(d[q]) : 0;
    int rank_in = q > 0 ? rank(d[q - 1]) : 0;
    return dims[q] - rank_out - rank_in;
  }
};

}  // namespace lochodge
