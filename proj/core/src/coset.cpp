#include "plcov/coset.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace plcov {

int CosetTable::apply_letter(int coset, int letter) const {
  int g = std::abs(letter) - 1;
  const auto& perm = action[static_cast<size_t>(g)];
  if (letter > 0) return perm[static_cast<size_t>(coset)];
  for (int c = 0; c < degree; ++c)
    if (perm[static_cast<size_t>(c)] == coset) return c;
  throw InvalidInput("coset table: action is not a permutation");
}

int CosetTable::apply_word(int coset, const Word& w) const {
  for (int letter : w) coset = apply_letter(coset, letter);
  return coset;
}

bool CosetTable::is_transitive() const {
  if (degree <= 1) return true;
  std::vector<bool> seen(static_cast<size_t>(degree), false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  int found = 1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop();
    for (const auto& perm : action) {
      int d = perm[static_cast<size_t>(c)];
      if (!seen[static_cast<size_t>(d)]) {
        seen[static_cast<size_t>(d)] = true;
        ++found;
        queue.push(d);
      }
    }
  }
  return found == degree;
}

bool CosetTable::satisfies(const std::vector<Word>& relators) const {
  for (const auto& w : relators)
    for (int c = 0; c < degree; ++c)
      if (apply_word(c, w) != c) return false;
  return true;
}

CosetTable identity_table(int generator_count) {
  CosetTable t;
  t.degree = 1;
  t.action.assign(static_cast<size_t>(generator_count), {0});
  return t;
}

CosetTable standardize(const CosetTable& t, int base) {
  std::vector<int> relabel(static_cast<size_t>(t.degree), -1);
  std::vector<int> order;
  relabel[static_cast<size_t>(base)] = 0;
  order.push_back(base);
  // forward images suffice: in a finite action every inverse is a power
  for (size_t i = 0; i < order.size(); ++i)
    for (const auto& perm : t.action) {
      int d = perm[static_cast<size_t>(order[i])];
      if (relabel[static_cast<size_t>(d)] < 0) {
        relabel[static_cast<size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  if (static_cast<int>(order.size()) != t.degree)
    throw InvalidInput("standardize: table is not transitive");
  CosetTable out;
  out.degree = t.degree;
  out.action.assign(t.action.size(),
                    std::vector<int>(static_cast<size_t>(t.degree)));
  for (size_t g = 0; g < t.action.size(); ++g)
    for (int c = 0; c < t.degree; ++c)
      out.action[g][static_cast<size_t>(relabel[static_cast<size_t>(c)])] =
          relabel[static_cast<size_t>(t.action[g][static_cast<size_t>(c)])];
  return out;
}

CosetTable conjugacy_canonical(const CosetTable& t) {
  CosetTable best = standardize(t, 0);
  for (int base = 1; base < t.degree; ++base)
    best = std::min(best, standardize(t, base));
  return best;
}

namespace {

/// Partial coset table used by the low-index backtracking search.
struct LowIndexSearch {
  const GroupPresentation& pres;
  int max_degree;
  long long node_budget;
  long long nodes = 0;
  int cols;                             // 2 per generator: forward, inverse
  std::vector<std::vector<int>> tab;    // [coset][col], -1 undefined
  std::vector<std::pair<int, int>> trail;
  std::set<CosetTable> found;

  LowIndexSearch(const GroupPresentation& p, int k, long long budget)
      : pres(p), max_degree(k), node_budget(budget),
        cols(2 * p.generator_count) {
    tab.push_back(std::vector<int>(static_cast<size_t>(cols), -1));
  }

  static int col_of(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }

  bool define(int c, int col, int d) {
    int& fwd = tab[static_cast<size_t>(c)][static_cast<size_t>(col)];
    int& bwd = tab[static_cast<size_t>(d)][static_cast<size_t>(col ^ 1)];
    if (fwd != -1) return fwd == d;
    if (bwd != -1) return bwd == c;
    fwd = d;
    bwd = c;
    trail.emplace_back(c, col);
    return true;
  }

  int at(int c, int col) const {
    return tab[static_cast<size_t>(c)][static_cast<size_t>(col)];
  }

  /// Scans relator w at coset x; returns false on contradiction, deduces a
  /// cell when exactly one gap remains.
  bool scan(int x, const Word& w) {
    int len = static_cast<int>(w.size());
    int fi = 0, c = x;
    while (fi < len) {
      int next = at(c, col_of(w[static_cast<size_t>(fi)]));
      if (next < 0) break;
      c = next;
      ++fi;
    }
    if (fi == len) return c == x;
    int bj = len, d = x;
    while (bj > fi + 1) {
      int prev = at(d, col_of(-w[static_cast<size_t>(bj - 1)]));
      if (prev < 0) break;
      d = prev;
      --bj;
    }
    if (bj == fi + 1)
      return define(c, col_of(w[static_cast<size_t>(fi)]), d);
    return true;  // gap of more than one letter: nothing to deduce
  }

  bool scan_all() {
    size_t settled;
    do {
      settled = trail.size();
      for (const auto& w : pres.relators)
        for (int x = 0; x < static_cast<int>(tab.size()); ++x)
          if (!scan(x, w)) return false;
    } while (settled != trail.size());
    return true;
  }

  void rewind(size_t trail_mark, size_t coset_mark) {
    while (trail.size() > trail_mark) {
      auto [c, col] = trail.back();
      trail.pop_back();
      int d = tab[static_cast<size_t>(c)][static_cast<size_t>(col)];
      tab[static_cast<size_t>(c)][static_cast<size_t>(col)] = -1;
      tab[static_cast<size_t>(d)][static_cast<size_t>(col ^ 1)] = -1;
    }
    tab.resize(coset_mark);
  }

  void complete() {
    CosetTable t;
    t.degree = static_cast<int>(tab.size());
    t.action.assign(static_cast<size_t>(pres.generator_count),
                    std::vector<int>(tab.size()));
    for (int g = 0; g < pres.generator_count; ++g)
      for (size_t c = 0; c < tab.size(); ++c)
        t.action[static_cast<size_t>(g)][c] = tab[c][static_cast<size_t>(2 * g)];
    if (t.is_transitive() && t.satisfies(pres.relators))
      found.insert(conjugacy_canonical(t));
  }

  void search() {
    if (++nodes > node_budget)
      throw ResourceExhausted("low_index_subgroups: node budget " +
                              std::to_string(node_budget) + " exhausted");
    int c = -1, col = -1;
    for (size_t i = 0; i < tab.size() && c < 0; ++i)
      for (int j = 0; j < cols; ++j)
        if (tab[i][static_cast<size_t>(j)] < 0) {
          c = static_cast<int>(i);
          col = j;
          break;
        }
    if (c < 0) {
      complete();
      return;
    }
    int n = static_cast<int>(tab.size());
    for (int d = 0; d <= n && d <= max_degree - 1; ++d) {
      size_t trail_mark = trail.size();
      size_t coset_mark = tab.size();
      if (d == n) {
        if (n >= max_degree) break;
        tab.push_back(std::vector<int>(static_cast<size_t>(cols), -1));
      }
      if (define(c, col, d) && scan_all()) search();
      rewind(trail_mark, coset_mark);
    }
  }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const GroupPresentation& p, int k,
                                            EnumerationBudget budget) {
  if (k < 1) throw InvalidInput("low_index_subgroups: k must be >= 1");
  if (p.generator_count == 0) return {identity_table(0)};
  LowIndexSearch search(p, k, budget.max_nodes);
  search.search();
  return {search.found.begin(), search.found.end()};
}

int hom_apply(const FiniteGroup& g, const FiniteHom& hom, const Word& w) {
  int x = FiniteGroup::identity();
  for (int letter : w) {
    int img = hom.images[static_cast<size_t>(std::abs(letter)) - 1];
    x = g.mul(x, letter > 0 ? img : g.inv(img));
  }
  return x;
}

bool hom_is_valid(const GroupPresentation& p, const FiniteGroup& g,
                  const FiniteHom& hom) {
  if (static_cast<int>(hom.images.size()) != p.generator_count) return false;
  for (int img : hom.images)
    if (img < 0 || img >= g.order()) return false;
  for (const auto& w : p.relators)
    if (hom_apply(g, hom, w) != FiniteGroup::identity()) return false;
  return true;
}

namespace {

struct HomSearch {
  const GroupPresentation& pres;
  const FiniteGroup& group;
  long long node_budget;
  long long nodes = 0;
  std::vector<int> images;  // -1 unassigned
  std::vector<FiniteHom> found;

  /// Propagates relators with a single unassigned occurrence; returns false
  /// on contradiction.  Assignments are recorded on `assigned` for undo.
  bool propagate(std::vector<int>& assigned) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& w : pres.relators) {
        int unknown_pos = -1;
        int unknown_count = 0;
        for (size_t i = 0; i < w.size(); ++i)
          if (images[static_cast<size_t>(std::abs(w[i])) - 1] < 0) {
            ++unknown_count;
            unknown_pos = static_cast<int>(i);
          }
        if (unknown_count == 0) {
          int x = FiniteGroup::identity();
          for (int letter : w) {
            int img = images[static_cast<size_t>(std::abs(letter)) - 1];
            x = group.mul(x, letter > 0 ? img : group.inv(img));
          }
          if (x != FiniteGroup::identity()) return false;
        } else if (unknown_count == 1) {
          // Solve prefix * x^s * suffix = e for the single occurrence.
          int gidx = std::abs(w[static_cast<size_t>(unknown_pos)]) - 1;
          int prefix = FiniteGroup::identity();
          for (int i = 0; i < unknown_pos; ++i) {
            int letter = w[static_cast<size_t>(i)];
            int img = images[static_cast<size_t>(std::abs(letter)) - 1];
            prefix = group.mul(prefix, letter > 0 ? img : group.inv(img));
          }
          int suffix = FiniteGroup::identity();
          for (size_t i = static_cast<size_t>(unknown_pos) + 1; i < w.size(); ++i) {
            int letter = w[i];
            int img = images[static_cast<size_t>(std::abs(letter)) - 1];
            suffix = group.mul(suffix, letter > 0 ? img : group.inv(img));
          }
          int xs = group.mul(group.inv(prefix), group.inv(suffix));
          int value = w[static_cast<size_t>(unknown_pos)] > 0 ? xs : group.inv(xs);
          images[static_cast<size_t>(gidx)] = value;
          assigned.push_back(gidx);
          progress = true;
        }
      }
    }
    return true;
  }

  void search() {
    if (++nodes > node_budget)
      throw ResourceExhausted("enumerate_homs: node budget " +
                              std::to_string(node_budget) + " exhausted");
    int next = -1;
    for (size_t i = 0; i < images.size(); ++i)
      if (images[i] < 0) {
        next = static_cast<int>(i);
        break;
      }
    if (next < 0) {
      found.push_back(FiniteHom{images});
      return;
    }
    for (int value = 0; value < group.order(); ++value) {
      std::vector<int> assigned;
      images[static_cast<size_t>(next)] = value;
      assigned.push_back(next);
      if (propagate(assigned)) search();
      for (int g : assigned) images[static_cast<size_t>(g)] = -1;
    }
  }
};

}  // namespace

std::vector<FiniteHom> enumerate_homs(const GroupPresentation& p,
                                      const FiniteGroup& g,
                                      EnumerationBudget budget) {
  if (p.generator_count == 0) return {FiniteHom{{}}};
  HomSearch search{p, g, budget.max_nodes, {}, {}};
  search.images.assign(static_cast<size_t>(p.generator_count), -1);
  {
    std::vector<int> assigned;
    if (!search.propagate(assigned)) return {};
    search.search();
  }
  std::sort(search.found.begin(), search.found.end());
  search.found.erase(std::unique(search.found.begin(), search.found.end()),
                     search.found.end());
  return search.found;
}

CosetTable kernel_coset_table(const GroupPresentation& p, const FiniteGroup& g,
                              const FiniteHom& hom) {
  if (!hom_is_valid(p, g, hom))
    throw InvalidInput("kernel_coset_table: generator images violate a relator");
  std::vector<int> image = g.subgroup_generated(hom.images);
  std::map<int, int> index;
  for (size_t i = 0; i < image.size(); ++i) index[image[i]] = static_cast<int>(i);
  CosetTable t;
  t.degree = static_cast<int>(image.size());
  t.action.assign(static_cast<size_t>(p.generator_count),
                  std::vector<int>(image.size()));
  for (int gi = 0; gi < p.generator_count; ++gi)
    for (size_t c = 0; c < image.size(); ++c)
      t.action[static_cast<size_t>(gi)][c] =
          index.at(g.mul(image[c], hom.images[static_cast<size_t>(gi)]));
  return t;
}

}  // namespace plcov
