#include "plcov/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plcov {

void FiniteGroup::finish_validate() {
  int n = order();
  if (n == 0) throw InvalidInput("finite group: empty table");
  if (n > 5040)
    throw InvalidInput("finite group: order " + std::to_string(n) +
                       " exceeds the supported bound 5040");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidInput("finite group: ragged multiplication table");
    for (int x : row)
      if (x < 0 || x >= n)
        throw InvalidInput("finite group: table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw InvalidInput("finite group: element 0 is not an identity");
  inverse_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[static_cast<size_t>(a)] = b;
        break;
      }
    if (inverse_[static_cast<size_t>(a)] < 0)
      throw InvalidInput("finite group: element " + std::to_string(a) +
                         " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InvalidInput("finite group: table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw InvalidInput("cyclic group: order must be >= 1");
  FiniteGroup g;
  g.label_ = "Z/" + std::to_string(m);
  g.table_.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.table_[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % m;
  g.finish_validate();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(
    int degree, const std::vector<std::vector<int>>& gens, std::string label) {
  if (degree < 1) throw InvalidInput("perm group: degree must be >= 1");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw InvalidInput("perm group: generator of wrong degree");
    std::vector<bool> seen(static_cast<size_t>(degree), false);
    for (int x : p) {
      if (x < 0 || x >= degree || seen[static_cast<size_t>(x)])
        throw InvalidInput("perm group: generator is not a permutation");
      seen[static_cast<size_t>(x)] = true;
    }
  }
  std::vector<int> id(static_cast<size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> elems{id};
  std::vector<std::vector<int>> frontier{id};
  auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    // "a then b"
    std::vector<int> c(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i)
      c[static_cast<size_t>(i)] = b[static_cast<size_t>(a[static_cast<size_t>(i)])];
    return c;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        auto p = compose(e, g);
        if (elems.insert(p).second) next.push_back(std::move(p));
        if (elems.size() > 5040)
          throw InvalidInput("perm group: order exceeds the supported bound 5040");
      }
    frontier = std::move(next);
  }
  // identity is lexicographically smallest, so it lands at index 0
  std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  FiniteGroup g;
  g.label_ = std::move(label);
  g.perms_ = sorted;
  int n = static_cast<int>(sorted.size());
  g.table_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          index.at(compose(sorted[static_cast<size_t>(a)], sorted[static_cast<size_t>(b)]));
  g.finish_validate();
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw InvalidInput("symmetric group: need 1 <= n <= 6");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> t(static_cast<size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[static_cast<size_t>(i)], t[static_cast<size_t>(i + 1)]);
    gens.push_back(std::move(t));
  }
  if (gens.empty()) return cyclic(1);
  return from_permutations(n, gens, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::string label) {
  FiniteGroup g;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.finish_validate();
  return g;
}

std::vector<int> FiniteGroup::subgroup_generated(
    const std::vector<int>& gens) const {
  std::set<int> elems{identity()};
  std::vector<int> frontier{identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int g : gens) {
        int x = mul(e, g);
        if (elems.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

}  // namespace plcov
