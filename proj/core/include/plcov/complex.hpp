#ifndef PLCOV_COMPLEX_HPP
#define PLCOV_COMPLEX_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "plcov/simplex.hpp"

namespace plcov {

/// A finite abstract simplicial complex, stored as its full face closure
/// grouped by dimension, plus the list of maximal simplices (facets).
///
/// Vertex ids live in a shared ambient id space: subcomplex operations keep
/// the ids of the parent complex, so a complex need not use every id below
/// its maximum.  File readers enforce density (0..V-1) at the IO boundary.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Smallest face-closed complex containing the facets; the stored facet
  /// set is pruned to maximal simplices.  Throws InvalidInput on malformed
  /// simplices.
  static SimplicialComplex closure_from_facets(std::vector<Simplex> facets);

  bool empty() const { return by_dim_.empty(); }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// Simplices of one dimension, sorted lexicographically.
  const std::vector<Simplex>& simplices(int dim) const;
  /// Maximal simplices, sorted by (dimension, lex).
  const std::vector<Simplex>& facets() const { return facets_; }
  /// All simplices, ascending (dimension, lex) order.
  std::vector<Simplex> all_simplices() const;

  bool contains(const Simplex& s) const;
  std::size_t simplex_count() const;
  std::size_t count(int dim) const {
    return dim >= 0 && dim <= dimension() ? by_dim_[static_cast<size_t>(dim)].size() : 0;
  }

  /// Sorted list of vertex ids in use.
  std::vector<VertexId> vertex_ids() const;
  std::size_t vertex_count() const { return count(0); }
  bool has_vertex(VertexId v) const { return contains(Simplex{v}); }

  long long euler_characteristic() const;

  /// Subcomplex of all simplices of dimension <= i.  Throws on i out of
  /// [0, dim].
  SimplicialComplex skeleton(int i) const;

  bool is_connected() const;
  /// Partition of the vertex ids into connected components of the
  /// 1-skeleton, ordered by smallest member; each component sorted.
  std::vector<std::vector<VertexId>> components() const;

  /// Join with a vertex-disjoint complex.  Throws InvalidInput on id
  /// collision.
  SimplicialComplex join(const SimplicialComplex& other) const;
  /// Cone: join with the single new vertex `apex`.
  SimplicialComplex cone(VertexId apex) const;

  /// True iff every simplex of `other` is a simplex of this complex.
  bool has_subcomplex(const SimplicialComplex& other) const;

  /// Full subcomplex induced on a vertex set: all simplices whose vertices
  /// lie in `verts`.
  SimplicialComplex full_subcomplex(const std::set<VertexId>& verts) const;

  /// Subcomplex of all simplices satisfying a face-closed predicate.
  SimplicialComplex subcomplex_where(
      const std::function<bool(const Simplex&)>& pred) const;

  /// Intersection with another complex over the same id space.
  SimplicialComplex intersect(const SimplicialComplex& other) const;
  /// Union with another complex over the same id space.
  SimplicialComplex unite(const SimplicialComplex& other) const;

  /// Relabels vertices via map; map must be injective on vertex_ids().
  SimplicialComplex relabel(const std::map<VertexId, VertexId>& map) const;

  /// Copy with dense vertex ids 0..V-1; `to_ambient[new_id] = old_id`.
  SimplicialComplex densify(std::vector<VertexId>* to_ambient = nullptr) const;

  bool operator==(const SimplicialComplex& other) const {
    return by_dim_ == other.by_dim_;
  }

 private:
  std::vector<std::vector<Simplex>> by_dim_;  // sorted per dimension
  std::vector<Simplex> facets_;
};

/// f-vector as a string like "(4, 6, 4)"; used in reports.
std::string f_vector_string(const SimplicialComplex& x);

}  // namespace plcov

#endif  // PLCOV_COMPLEX_HPP
