#ifndef PLCOV_ZMODULE_HPP
#define PLCOV_ZMODULE_HPP

#include <optional>
#include <vector>

#include "plcov/base.hpp"

namespace plcov {

using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;  // row-major

ZMat zmat_zero(std::size_t rows, std::size_t cols);
ZMat zmat_identity(std::size_t n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZVec zmat_apply(const ZMat& a, const ZVec& x);
std::size_t zmat_rows(const ZMat& a);
std::size_t zmat_cols(const ZMat& a);
/// Matrix from a list of column vectors (all the same length).
ZMat zmat_from_columns(const std::vector<ZVec>& cols, std::size_t rows);
ZVec zmat_column(const ZMat& a, std::size_t j);

/// Smith normal form with full transform tracking: u * a * v = d, with d
/// diagonal, nonnegative, and d1 | d2 | ... ; uinv and vinv are the exact
/// inverses of u and v.
struct SmithForm {
  ZMat d;
  ZMat u, uinv;
  ZMat v, vinv;
  std::size_t rank = 0;
  std::vector<Integer> divisors;  // the nonzero diagonal entries
};
SmithForm smith_normal_form(ZMat a);

/// Basis of the integer null space of a (as column vectors).
std::vector<ZVec> kernel_basis(const ZMat& a);

/// Solves a x = b over the integers.
std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b);

/// Basis (column vectors) of the lattice spanned by the given generators
/// inside Z^rows.
std::vector<ZVec> lattice_basis(const std::vector<ZVec>& generators,
                                std::size_t rows);

/// Presentation of the quotient (lattice spanned by z_gens) / (lattice
/// spanned by b_gens); requires the second lattice to be contained in the
/// first.
struct QuotientGroup {
  std::vector<Integer> divisors;  // torsion coefficients > 1, d1 | d2 | ...
  std::size_t free_rank = 0;
  /// Vectors in Z^rows generating the torsion summands (aligned with
  /// `divisors`), then the free summands.
  std::vector<ZVec> generators;
  bool trivial() const { return divisors.empty() && free_rank == 0; }
};
QuotientGroup quotient_group(const std::vector<ZVec>& z_gens,
                             const std::vector<ZVec>& b_gens,
                             std::size_t rows);

/// Canonical residue of v modulo a full-rank lattice in Z^n, computed from
/// a Hermite-reduced basis; two vectors are congruent iff their residues
/// are equal.
class LatticeReducer {
 public:
  LatticeReducer() = default;
  /// Throws InvalidInput when the generators do not span full rank.
  LatticeReducer(const std::vector<ZVec>& generators, std::size_t n);
  ZVec reduce(ZVec v) const;
  bool congruent(const ZVec& a, const ZVec& b) const;
  std::size_t dim() const { return n_; }
  /// Number of residues = lattice index = product of diagonal entries.
  Integer index() const;

 private:
  std::size_t n_ = 0;
  ZMat hnf_;  // lower-triangular column basis, positive diagonal
};

}  // namespace plcov

#endif  // PLCOV_ZMODULE_HPP
