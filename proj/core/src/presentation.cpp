#include "plcov/presentation.hpp"

#include <algorithm>
#include <queue>

namespace plcov {

Word reduce_word(Word w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) throw InvalidInput("word: zero letter");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

EdgePathPresentation EdgePathPresentation::of(const SimplicialComplex& x,
                                              VertexId basepoint) {
  if (x.empty()) throw InvalidInput("edge_path_presentation: empty complex");
  if (!x.has_vertex(basepoint))
    throw InvalidInput("edge_path_presentation: basepoint " +
                       std::to_string(basepoint) + " not a vertex");
  if (!x.is_connected())
    throw InvalidInput("edge_path_presentation: complex is not connected");

  EdgePathPresentation out;
  out.complex_ = x;
  out.basepoint_ = basepoint;

  std::map<VertexId, std::vector<VertexId>> adj;
  for (VertexId v : x.vertex_ids()) adj[v];
  for (const auto& e : x.simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());

  out.parent_[basepoint] = basepoint;
  std::queue<VertexId> queue;
  queue.push(basepoint);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId w : adj[v])
      if (!out.parent_.count(w)) {
        out.parent_[w] = v;
        queue.push(w);
      }
  }

  auto is_tree_edge = [&](const Simplex& e) {
    return out.parent_.at(e[1]) == e[0] || out.parent_.at(e[0]) == e[1];
  };
  for (const auto& e : x.simplices(1))
    if (!is_tree_edge(e)) {
      out.generator_of_[e] = out.pres_.generator_count++;
      out.pres_.origin.push_back(e);
    }

  if (x.dimension() >= 2)
    for (const auto& t : x.simplices(2)) {
      Word w = out.edge_word(t[0], t[1]);
      Word bc = out.edge_word(t[1], t[2]);
      Word ca = invert_word(out.edge_word(t[0], t[2]));
      w.insert(w.end(), bc.begin(), bc.end());
      w.insert(w.end(), ca.begin(), ca.end());
      w = reduce_word(std::move(w));
      if (!w.empty()) out.pres_.relators.push_back(std::move(w));
    }
  return out;
}

Word EdgePathPresentation::edge_word(VertexId u, VertexId v) const {
  Simplex e = Simplex::sorted({u, v});
  if (!complex_.contains(e)) throw InvalidInput("edge_word: no such edge");
  auto it = generator_of_.find(e);
  if (it == generator_of_.end()) return {};
  int letter = it->second + 1;
  return {u < v ? letter : -letter};
}

Word EdgePathPresentation::path_word(const std::vector<VertexId>& path) const {
  Word w;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    Word e = edge_word(path[i], path[i + 1]);
    w.insert(w.end(), e.begin(), e.end());
  }
  return reduce_word(std::move(w));
}

std::vector<VertexId> EdgePathPresentation::tree_path(VertexId v) const {
  std::vector<VertexId> rev;
  VertexId cur = v;
  while (true) {
    rev.push_back(cur);
    VertexId p = parent_.at(cur);
    if (p == cur) break;
    cur = p;
  }
  return {rev.rbegin(), rev.rend()};
}

Abelianization abelianization(const GroupPresentation& p) {
  Abelianization out;
  if (p.generator_count == 0) return out;
  std::size_t g = static_cast<std::size_t>(p.generator_count);
  ZMat m = zmat_zero(p.relators.size(), g);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int letter : p.relators[r]) {
      std::size_t idx = static_cast<std::size_t>(std::abs(letter)) - 1;
      m[r][idx] += letter > 0 ? 1 : -1;
    }
  if (p.relators.empty()) {
    out.free_rank = g;
    return out;
  }
  SmithForm s = smith_normal_form(std::move(m));
  out.free_rank = g - s.rank;
  for (const auto& d : s.divisors)
    if (d > 1) out.divisors.push_back(d);
  return out;
}

}  // namespace plcov
