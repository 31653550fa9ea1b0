#ifndef PLCOV_COVERING_HPP
#define PLCOV_COVERING_HPP

#include "plcov/coset.hpp"

namespace plcov {

/// A simplicial map given by its vertex assignment.  Images of simplices
/// must be simplices of the target; dimension may drop only where a caller
/// explicitly tolerates it (branched coverings declare that on the branch).
struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<int> vertex_map;  // indexed by source vertex id

  int apply(VertexId v) const { return vertex_map[static_cast<size_t>(v)]; }
  /// Image simplex (vertex set of the images; may have lower dimension).
  Simplex image(const Simplex& s) const;
};

/// Throws InvalidInput when some simplex image is not a target simplex.
void validate_simplicial(const SimplicialMap& f);

struct CoveringMap {
  SimplicialMap map;
  int degree = 0;
};

struct CoveringVerdict {
  bool valid = false;
  std::vector<std::string> violations;
};

/// Star bijectivity at every source vertex plus constant vertex-fiber
/// cardinality k.
CoveringVerdict verify_covering(const SimplicialMap& f, int k);

/// Total space of the covering described by a coset table: sheets are
/// glued along the edge permutations induced by the table through the
/// edge-path presentation (tree edges act trivially).  Vertex (v, sheet)
/// becomes id rank(v)*degree + sheet.
CoveringMap covering_from_monodromy(const SimplicialComplex& x,
                                    const CosetTable& table);

/// Same construction from an explicit Sym(S)-valued edge cocycle: one
/// permutation per edge (right action on sheets, oriented min->max vertex).
/// The cocycle condition is checked on every triangle and the offending
/// triangle is named on failure.
CoveringMap covering_from_cocycle(
    const SimplicialComplex& x,
    const std::map<Simplex, std::vector<int>>& edge_perm, int degree);

/// The 1-fold covering of x by itself; works for disconnected complexes,
/// where no presentation exists.
CoveringMap identity_covering(const SimplicialComplex& x);

/// Fiber of a target vertex, in ascending source-vertex order.
std::vector<VertexId> vertex_fiber(const SimplicialMap& f, VertexId target);

/// Unique lift of the edge (f(y), w) through the source vertex y.
VertexId lift_edge(const SimplicialMap& f, VertexId y, VertexId target_w);

/// Monodromy extraction: the coset table of the covering with respect to a
/// presentation of the base (sheets = fiber over the basepoint, ascending).
CosetTable monodromy_of(const CoveringMap& cover,
                        const EdgePathPresentation& pres);

}  // namespace plcov

#endif  // PLCOV_COVERING_HPP
