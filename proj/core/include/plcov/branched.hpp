#ifndef PLCOV_BRANCHED_HPP
#define PLCOV_BRANCHED_HPP

#include "plcov/covering.hpp"
#include "plcov/pseudomanifold.hpp"

namespace plcov {

/// Branched covering: a simplicial map with declared branch subcomplex of
/// codimension >= 2; away from the branch and its image, a k-fold covering.
struct BranchedCovering {
  SimplicialMap map;
  SimplicialComplex branch;  // subcomplex of the source
  int degree = 0;

  SimplicialComplex branch_image() const;
};

struct BranchedVerdict {
  bool valid = false;
  std::vector<std::string> violations;
};

BranchedVerdict verify_branched(const BranchedCovering& bc);

/// The identity map with an arbitrary branch subcomplex is a branched
/// covering.
BranchedCovering identity_branched(const SimplicialComplex& x,
                                   SimplicialComplex branch = {});

/// Normal (initial) branched completion: extends a covering of the
/// complement model C(V,X) across the strata of V, coning off the preimage
/// components of links stratum by stratum, from the top dimension of V
/// downward.  The result maps onto the flattened barycentric subdivision of
/// X; the branch locus is the preimage of the derived subdivision of V, and
/// the fiber over a barycenter of V has one point per link-preimage
/// component there.
///
/// Preconditions: V full in X of codimension >= 2; `cover` is a covering of
/// the flattened complement model (exact complex equality is required).
struct CompletionResult {
  BranchedCovering covering;     // target = derived(x) flattened
  DerivedComplex derived;        // the subdivision the target lives on
  /// Y-vertex sheet counts per barycenter id, for fiber reports.
  std::vector<int> fiber_size;
};
CompletionResult branched_completion(const SimplicialComplex& x,
                                     const SimplicialComplex& v,
                                     const CoveringMap& cover);

/// Riemann-Hurwitz residual for surface branched coverings:
/// chi(Y) - k*chi(X) + sum over branch image vertices of (k - |fiber|).
/// Zero for every valid branched covering of surfaces.  Throws on
/// dimension != 2.
long long riemann_hurwitz_residual(const BranchedCovering& bc);

/// A morphism of branched coverings over a fixed base: a commutative
/// triangle phi: Y_i -> Y with (phi, phi_branch) itself a branched
/// covering.
struct BranchedMorphism {
  BranchedCovering over_base;     // (Y_i, f_i, B_i), f_i : Y_i -> X
  SimplicialMap phi;              // Y_i -> Y
  SimplicialComplex phi_branch;   // branch part of phi
};

/// Reading of the branch condition on morphisms; AsPrinted requires the
/// target branch to lie in the image of the member branch, Pullback
/// requires member branches to contain the preimage of the target branch.
enum class MorphismBranchRule { AsPrinted, Pullback };

struct EtaleFamilyVerdict {
  bool valid = false;    // every member is a well-formed morphism
  bool covers = false;   // unbranched images jointly cover Y - B
  std::vector<std::string> violations;
};

/// Checks the covering condition of the etale site: the unbranched parts of
/// the members jointly cover the unbranched part of the target.
EtaleFamilyVerdict is_etale_covering_family(
    const BranchedCovering& target, const std::vector<BranchedMorphism>& family,
    MorphismBranchRule rule = MorphismBranchRule::AsPrinted);

/// Desk-scale factorization search between two branched coverings of the
/// same base: the vertex map of a simplicial g: Y1 -> Y2 with f1 = f2 o g
/// and no collapsed simplices, when one exists.
std::optional<std::vector<int>> factor_through(const BranchedCovering& bc1,
                                               const BranchedCovering& bc2);

}  // namespace plcov

#endif  // PLCOV_BRANCHED_HPP
