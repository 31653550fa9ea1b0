#ifndef PLCOV_PRESENTATION_HPP
#define PLCOV_PRESENTATION_HPP

#include <map>

#include "plcov/complex.hpp"
#include "plcov/zmodule.hpp"

namespace plcov {

/// Words are lists of nonzero letters; letter +g or -g refers to generator
/// g-1 or its inverse.
using Word = std::vector<int>;

Word reduce_word(Word w);
Word invert_word(const Word& w);

struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;    // freely reduced, deterministic order
  std::vector<Simplex> origin;   // generator index -> its non-tree edge
};

/// Edge-path presentation of pi_1: one generator per non-tree edge of a BFS
/// spanning tree (rooted at the basepoint, neighbors visited in ascending
/// order), one relator per 2-simplex.  Also carries enough of the tree to
/// express any oriented edge of the complex as a word.
class EdgePathPresentation {
 public:
  static EdgePathPresentation of(const SimplicialComplex& x,
                                 VertexId basepoint);

  const GroupPresentation& presentation() const { return pres_; }
  const SimplicialComplex& complex() const { return complex_; }
  VertexId basepoint() const { return basepoint_; }

  /// Word of the loop basepoint -> u -> v -> basepoint (empty for tree
  /// edges); u and v must span an edge of the complex.
  Word edge_word(VertexId u, VertexId v) const;
  /// Word of a vertex path (consecutive vertices must span edges).
  Word path_word(const std::vector<VertexId>& path) const;
  /// Tree path from the basepoint to v.
  std::vector<VertexId> tree_path(VertexId v) const;

 private:
  GroupPresentation pres_;
  SimplicialComplex complex_;
  VertexId basepoint_ = 0;
  std::map<VertexId, VertexId> parent_;   // BFS tree, basepoint maps to itself
  std::map<Simplex, int> generator_of_;   // non-tree edge -> generator index
};

struct Abelianization {
  std::vector<Integer> divisors;  // elementary divisors > 1
  std::size_t free_rank = 0;
  bool trivial() const { return divisors.empty() && free_rank == 0; }
};

/// Elementary divisors and free rank of the abelianized presentation, from
/// the integer relator matrix.
Abelianization abelianization(const GroupPresentation& p);

}  // namespace plcov

#endif  // PLCOV_PRESENTATION_HPP
