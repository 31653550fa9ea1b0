#ifndef PLCOV_PSEUDOMANIFOLD_HPP
#define PLCOV_PSEUDOMANIFOLD_HPP

#include <optional>

#include "plcov/derived.hpp"

namespace plcov {

enum class PmMode { Closed, WithBoundary };

struct PseudomanifoldReport {
  bool valid = false;
  bool is_pure = false;
  PmMode mode = PmMode::Closed;
  int dimension = -1;
  std::map<Simplex, int> ridge_degrees;  // (n-1)-simplex -> cofacet count
  SimplicialComplex boundary_complex;    // boundary mode only, may be empty
  std::vector<std::string> violations;
};

/// Checks the pseudomanifold axioms: purity, and every ridge in exactly two
/// facets (closed) or at most two with the degree-1 ridges forming a closed
/// pseudomanifold one dimension down (with-boundary; the recursion runs
/// exactly once).  Violations are reported, not thrown.
PseudomanifoldReport verify_pseudomanifold(const SimplicialComplex& x,
                                           PmMode mode);

/// Dual cone of a base simplex: the subcomplex of T' of chains all of whose
/// entries contain the center.
struct DualCone {
  Simplex center;
  int dim = 0;                // n - dim(center)
  SimplicialComplex cells;    // over barycenter ids
};

DualCone dual_cone(const DerivedComplex& dc, const Simplex& center);

/// Union of all dual cones of dimension <= i: the full subcomplex of T' on
/// barycenters of base simplices of dimension >= n-i.
SimplicialComplex coskeleton(const DerivedComplex& dc, int i);

/// Link of a base simplex: chains in its dual cone not containing it, i.e.
/// all entries properly contain the center.  Over barycenter ids.
SimplicialComplex link_of(const DerivedComplex& dc, const Simplex& s);

struct NormalityReport {
  bool normal = false;
  std::vector<Simplex> witnesses;  // simplices with disconnected link
};

/// A pseudomanifold is normal when links of simplices of dimension < n-1
/// are connected (codimension-1 links are S^0 and exempt).  Requires a
/// valid pseudomanifold (closed or with boundary); throws otherwise.
NormalityReport is_normal(const SimplicialComplex& x);

/// C(B,X): chains disjoint from the base subcomplex B; equals the full
/// subcomplex of T' on barycenters of simplices not in B.  The open
/// complement X - B deformation retracts onto it, so all homotopy-level
/// computation on open complements happens here.
SimplicialComplex complement_C(const DerivedComplex& dc,
                               const SimplicialComplex& b);

/// S(D,X) for a union of dual cones D in T': the base simplices whose
/// derived subdivision shares no chain with D.  Validates that D is
/// dual-cone generated.
SimplicialComplex complement_S(const DerivedComplex& dc,
                               const SimplicialComplex& d_over_bary);

struct RegularNeighborhood {
  SimplicialComplex n;         // union of dual cones meeting B
  SimplicialComplex c;         // C(B,X)
  SimplicialComplex boundary;  // n intersect c
};

/// Requires B full in the base triangulation (throws a fullness error
/// naming a violating simplex otherwise).
RegularNeighborhood regular_neighborhood(const DerivedComplex& dc,
                                         const SimplicialComplex& b);

/// First simplex violating fullness of B in X (all vertices in B but the
/// simplex itself absent), or nullopt when B is full.
std::optional<Simplex> fullness_violation(const SimplicialComplex& x,
                                          const SimplicialComplex& b);

/// One derived pass making any subcomplex full: returns T' and the derived
/// subdivision of B inside it, both over barycenter ids.
struct FullPass {
  DerivedComplex derived;
  SimplicialComplex b_derived;  // over barycenter ids; full in derived.complex()
};
FullPass make_full(const SimplicialComplex& x, const SimplicialComplex& b);

/// Per-simplex join decompositions sigma = alpha * beta with alpha the
/// maximal face in B and beta the maximal face disjoint from B, for every
/// base simplex meeting both B and its complement.  Existence for all such
/// simplices certifies local collaring of the regular neighborhood
/// boundary.  Requires B full and B != X.
struct JoinDecomposition {
  Simplex simplex;
  Simplex alpha;
  Simplex beta;
};
std::vector<JoinDecomposition> collar_certificate(const SimplicialComplex& x,
                                                  const SimplicialComplex& b);

}  // namespace plcov

#endif  // PLCOV_PSEUDOMANIFOLD_HPP
