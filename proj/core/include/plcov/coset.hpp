#ifndef PLCOV_COSET_HPP
#define PLCOV_COSET_HPP

#include "plcov/finite_group.hpp"
#include "plcov/presentation.hpp"

namespace plcov {

/// Right action of the generators on cosets 0..degree-1, basepoint coset 0.
struct CosetTable {
  int degree = 0;
  std::vector<std::vector<int>> action;  // [generator][coset] -> coset

  int apply_letter(int coset, int letter) const;
  int apply_word(int coset, const Word& w) const;
  bool is_transitive() const;
  bool satisfies(const std::vector<Word>& relators) const;

  auto operator<=>(const CosetTable&) const = default;
};

CosetTable identity_table(int generator_count);

/// BFS relabeling from `base` so coset numbering is discovery order; the
/// canonical representative of a conjugacy class is the lexicographic
/// minimum of these over all base cosets.
CosetTable standardize(const CosetTable& t, int base = 0);
CosetTable conjugacy_canonical(const CosetTable& t);

struct EnumerationBudget {
  // Explicit search bounds; exceeding one raises ResourceExhausted naming it.
  long long max_nodes = 4'000'000;
};

/// All transitive coset tables of degree <= k satisfying the relators, up
/// to conjugacy, in deterministic order (systematic backtracking with
/// relator-scan deductions).
std::vector<CosetTable> low_index_subgroups(const GroupPresentation& p, int k,
                                            EnumerationBudget budget = {});

/// Homomorphism to a finite group, given by generator images.
struct FiniteHom {
  std::vector<int> images;  // per generator, elements of the target group
  auto operator<=>(const FiniteHom&) const = default;
};

bool hom_is_valid(const GroupPresentation& p, const FiniteGroup& g,
                  const FiniteHom& hom);
int hom_apply(const FiniteGroup& g, const FiniteHom& hom, const Word& w);

/// Complete list of homomorphisms into g, brute force over generator
/// images with relator propagation; deterministic (lexicographic) order.
std::vector<FiniteHom> enumerate_homs(const GroupPresentation& p,
                                      const FiniteGroup& g,
                                      EnumerationBudget budget = {});

/// Coset table of ker(hom): cosets are the elements of the image subgroup
/// (identity first, then ascending), generators act by right translation.
CosetTable kernel_coset_table(const GroupPresentation& p, const FiniteGroup& g,
                              const FiniteHom& hom);

}  // namespace plcov

#endif  // PLCOV_COSET_HPP
