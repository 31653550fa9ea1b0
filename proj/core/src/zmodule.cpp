#include "plcov/zmodule.hpp"

#include <algorithm>

namespace plcov {

ZMat zmat_zero(std::size_t rows, std::size_t cols) {
  return ZMat(rows, ZVec(cols, Integer(0)));
}

ZMat zmat_identity(std::size_t n) {
  ZMat m = zmat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::size_t zmat_rows(const ZMat& a) { return a.size(); }
std::size_t zmat_cols(const ZMat& a) { return a.empty() ? 0 : a[0].size(); }

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  std::size_t n = zmat_rows(a), k = zmat_cols(a), m = zmat_cols(b);
  ZMat c = zmat_zero(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

ZVec zmat_apply(const ZMat& a, const ZVec& x) {
  ZVec y(zmat_rows(a), Integer(0));
  for (std::size_t i = 0; i < zmat_rows(a); ++i)
    for (std::size_t j = 0; j < zmat_cols(a); ++j)
      if (a[i][j] != 0) y[i] += a[i][j] * x[j];
  return y;
}

ZMat zmat_from_columns(const std::vector<ZVec>& cols, std::size_t rows) {
  ZMat m = zmat_zero(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

ZVec zmat_column(const ZMat& a, std::size_t j) {
  ZVec c(zmat_rows(a));
  for (std::size_t i = 0; i < zmat_rows(a); ++i) c[i] = a[i][j];
  return c;
}

namespace {

struct SnfWork {
  ZMat a, u, uinv, v, vinv;

  void row_swap(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
    for (auto& row : uinv) std::swap(row[i], row[j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
    std::swap(vinv[i], vinv[j]);
  }
  void row_negate(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (auto& row : uinv) row[i] = -row[i];
  }
  // row_i += k * row_j
  void row_add(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] += k * a[j][c];
    for (std::size_t c = 0; c < u[i].size(); ++c) u[i][c] += k * u[j][c];
    for (auto& row : uinv) row[j] -= k * row[i];
  }
  // col_i += k * col_j
  void col_add(std::size_t i, std::size_t j, const Integer& k) {
    for (auto& row : a) row[i] += k * row[j];
    for (auto& row : v) row[i] += k * row[j];
    for (std::size_t c = 0; c < vinv[i].size(); ++c)
      vinv[j][c] -= k * vinv[i][c];
  }
};

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

SmithForm smith_normal_form(ZMat a) {
  std::size_t rows = zmat_rows(a), cols = zmat_cols(a);
  SnfWork w{std::move(a), zmat_identity(rows), zmat_identity(rows),
            zmat_identity(cols), zmat_identity(cols)};

  std::size_t t = 0;
  std::size_t bound = std::min(rows, cols);
  while (t < bound) {
    // Find the entry of least absolute value in the trailing submatrix.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (w.a[i][j] != 0 &&
            (!found || iabs(w.a[i][j]) < iabs(w.a[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) w.row_swap(t, pi);
    if (pj != t) w.col_swap(t, pj);
    if (w.a[t][t] < 0) w.row_negate(t);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (w.a[i][t] == 0) continue;
      Integer q = w.a[i][t] / w.a[t][t];
      w.row_add(i, t, -q);
      if (w.a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (w.a[t][j] == 0) continue;
      Integer q = w.a[t][j] / w.a[t][t];
      w.col_add(j, t, -q);
      if (w.a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; pick a new pivot

    // Enforce that the pivot divides the rest of the submatrix.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i)
      for (std::size_t j = t + 1; j < cols && divides_all; ++j)
        if (w.a[i][j] % w.a[t][t] != 0) {
          w.row_add(t, i, Integer(1));
          divides_all = false;
        }
    if (!divides_all) continue;
    ++t;
  }

  SmithForm out;
  out.rank = t;
  out.d = std::move(w.a);
  out.u = std::move(w.u);
  out.uinv = std::move(w.uinv);
  out.v = std::move(w.v);
  out.vinv = std::move(w.vinv);
  for (std::size_t i = 0; i < t; ++i) out.divisors.push_back(out.d[i][i]);
  return out;
}

std::vector<ZVec> kernel_basis(const ZMat& a) {
  std::size_t cols = zmat_cols(a);
  if (zmat_rows(a) == 0 || cols == 0) {
    // Zero map: the kernel is everything.
    std::vector<ZVec> basis;
    for (std::size_t j = 0; j < cols; ++j) {
      ZVec e(cols, Integer(0));
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  SmithForm s = smith_normal_form(a);
  std::vector<ZVec> basis;
  for (std::size_t j = s.rank; j < cols; ++j)
    basis.push_back(zmat_column(s.v, j));
  return basis;
}

std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b) {
  std::size_t rows = zmat_rows(a), cols = zmat_cols(a);
  if (rows == 0) return ZVec(cols, Integer(0));
  if (cols == 0) {
    for (const auto& x : b)
      if (x != 0) return std::nullopt;
    return ZVec{};
  }
  SmithForm s = smith_normal_form(a);
  ZVec y = zmat_apply(s.u, b);
  ZVec z(cols, Integer(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < s.rank) {
      if (y[i] % s.d[i][i] != 0) return std::nullopt;
      z[i] = y[i] / s.d[i][i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return zmat_apply(s.v, z);
}

std::vector<ZVec> lattice_basis(const std::vector<ZVec>& generators,
                                std::size_t rows) {
  if (generators.empty()) return {};
  ZMat g = zmat_from_columns(generators, rows);
  SmithForm s = smith_normal_form(g);
  // g = uinv d vinv, so the lattice equals uinv * d * Z^cols; a basis is
  // d_i * (column i of uinv) for i < rank.
  std::vector<ZVec> basis;
  for (std::size_t i = 0; i < s.rank; ++i) {
    ZVec col = zmat_column(s.uinv, i);
    for (auto& x : col) x *= s.d[i][i];
    basis.push_back(std::move(col));
  }
  return basis;
}

QuotientGroup quotient_group(const std::vector<ZVec>& z_gens,
                             const std::vector<ZVec>& b_gens,
                             std::size_t rows) {
  QuotientGroup out;
  std::vector<ZVec> zb = lattice_basis(z_gens, rows);
  if (zb.empty()) return out;  // trivial group
  ZMat zb_mat = zmat_from_columns(zb, rows);

  // Express each generator of the sublattice in the basis of the big one.
  std::vector<ZVec> coeff_cols;
  for (const auto& b : b_gens) {
    auto c = solve_integer(zb_mat, b);
    if (!c)
      throw InvalidInput(
          "quotient_group: relation lattice is not contained in the "
          "cocycle lattice");
    coeff_cols.push_back(*c);
  }
  std::size_t r = zb.size();
  ZMat c = coeff_cols.empty() ? zmat_zero(r, 0)
                              : zmat_from_columns(coeff_cols, r);
  SmithForm s = smith_normal_form(c);

  // New basis w_i = sum_j uinv[j][i] zb_j diagonalizes the quotient; the
  // nonzero divisors precede the zero diagonal, so generators come out
  // torsion-first, aligned with `divisors`.
  ZMat w = zmat_mul(zb_mat, s.uinv);
  for (std::size_t i = 0; i < r; ++i) {
    Integer d = i < s.rank ? s.d[i][i] : Integer(0);
    if (d == 1) continue;
    out.generators.push_back(zmat_column(w, i));
    if (d == 0)
      out.free_rank++;
    else
      out.divisors.push_back(d);
  }
  return out;
}

LatticeReducer::LatticeReducer(const std::vector<ZVec>& generators,
                               std::size_t n)
    : n_(n) {
  std::vector<ZVec> basis = lattice_basis(generators, n);
  if (basis.size() != n)
    throw InvalidInput("LatticeReducer: lattice is not full rank");
  // Column-style Hermite form: lower triangular with positive diagonal,
  // entries left of the diagonal reduced.
  ZMat m = zmat_from_columns(basis, n);
  for (std::size_t i = 0; i < n; ++i) {
    // Clear row i to the right of column i by exact gcd column ops.
    for (std::size_t j = i + 1; j < n; ++j) {
      while (m[i][j] != 0) {
        if (iabs(m[i][i]) > iabs(m[i][j]) || m[i][i] == 0) {
          for (std::size_t r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
          continue;
        }
        Integer q = m[i][j] / m[i][i];
        for (std::size_t r = 0; r < n; ++r) m[r][j] -= q * m[r][i];
      }
    }
    if (m[i][i] < 0)
      for (std::size_t r = 0; r < n; ++r) m[r][i] = -m[r][i];
    if (m[i][i] == 0)
      throw InvalidInput("LatticeReducer: lattice is not full rank");
    // Reduce earlier columns against this pivot.
    for (std::size_t j = 0; j < i; ++j) {
      Integer q;
      // floor division so residues land in [0, pivot)
      Integer a = m[i][j], b = m[i][i];
      q = a / b;
      if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
      if (q != 0)
        for (std::size_t r = 0; r < n; ++r) m[r][j] -= q * m[r][i];
    }
  }
  hnf_ = std::move(m);
}

ZVec LatticeReducer::reduce(ZVec v) const {
  // hnf_ is lower triangular, so row i is settled by column i alone when
  // processed top-down.
  for (std::size_t i = 0; i < n_; ++i) {
    Integer a = v[i], b = hnf_[i][i];
    Integer q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
    if (q != 0)
      for (std::size_t r = i; r < n_; ++r) v[r] -= q * hnf_[r][i];
  }
  return v;
}

bool LatticeReducer::congruent(const ZVec& a, const ZVec& b) const {
  ZVec d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = a[i] - b[i];
  ZVec r = reduce(std::move(d));
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

Integer LatticeReducer::index() const {
  Integer p(1);
  for (std::size_t i = 0; i < n_; ++i) p *= hnf_[i][i];
  return p;
}

}  // namespace plcov
