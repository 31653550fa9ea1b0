#ifndef PLCOV_DERIVED_HPP
#define PLCOV_DERIVED_HPP

#include <map>
#include <memory>
#include <vector>

#include "plcov/complex.hpp"

namespace plcov {

/// The barycentric subdivision T' of a base complex, kept in chain encoding:
/// every simplex of T' is a chain of base simplices, each a proper face of
/// its predecessor.  Barycenter ids are assigned in (dimension, lex) order
/// of base simplices, so reading a derived simplex's vertex ids from
/// largest to smallest recovers the chain top-down.  Dual cones, links and
/// complement models are all definable as predicates on these chains.
class DerivedComplex {
 public:
  static DerivedComplex of(const SimplicialComplex& base);

  const SimplicialComplex& base() const { return base_; }
  /// T' as a plain complex over barycenter ids.
  const SimplicialComplex& complex() const { return flat_; }

  int barycenter_count() const { return static_cast<int>(base_simplices_.size()); }
  /// Barycenter id of a base simplex; throws InvalidInput if absent.
  int barycenter_of(const Simplex& s) const;
  /// Base simplex whose barycenter has this id.
  const Simplex& base_simplex(int bary_id) const {
    return base_simplices_[static_cast<size_t>(bary_id)];
  }
  int base_dim(int bary_id) const { return base_simplex(bary_id).dim(); }

  /// Chain of a derived simplex, top-down (decreasing base dimension).
  std::vector<int> chain_of(const Simplex& derived) const;

 private:
  SimplicialComplex base_;
  std::vector<Simplex> base_simplices_;  // id order: (dim, lex)
  std::map<Simplex, int> bary_id_;
  SimplicialComplex flat_;
};

/// A subcomplex of some T' flattened to dense vertex ids, remembering both
/// the barycenter ids (`to_bary`) and the derived complex it came from.
struct FlattenedSub {
  SimplicialComplex complex;      // dense ids 0..V-1
  std::vector<int> to_bary;       // dense id -> barycenter id
  std::map<int, int> from_bary;   // barycenter id -> dense id
};

FlattenedSub flatten_sub(const SimplicialComplex& sub_over_bary_ids);

}  // namespace plcov

#endif  // PLCOV_DERIVED_HPP
