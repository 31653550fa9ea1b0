#include "plcov/covering.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace plcov {

namespace {
std::string str(const Simplex& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}
}  // namespace

Simplex SimplicialMap::image(const Simplex& s) const {
  std::vector<VertexId> vs;
  vs.reserve(static_cast<size_t>(s.size()));
  for (VertexId v : s.vertices()) vs.push_back(apply(v));
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return Simplex(std::move(vs));
}

void validate_simplicial(const SimplicialMap& f) {
  if (f.source.empty()) throw InvalidInput("simplicial map: empty source");
  int max_id = f.source.vertex_ids().back();
  if (static_cast<int>(f.vertex_map.size()) <= max_id)
    throw InvalidInput("simplicial map: vertex map too short");
  for (VertexId v : f.source.vertex_ids())
    if (!f.target.has_vertex(f.apply(v)))
      throw InvalidInput("simplicial map: image of vertex " +
                         std::to_string(v) + " is not a target vertex");
  for (const auto& s : f.source.facets())
    if (!f.target.contains(f.image(s)))
      throw InvalidInput("simplicial map: image of " + str(s) +
                         " is not a simplex of the target");
}

CoveringVerdict verify_covering(const SimplicialMap& f, int k) {
  CoveringVerdict verdict;
  try {
    validate_simplicial(f);
  } catch (const InvalidInput& err) {
    verdict.violations.push_back(err.what());
    return verdict;
  }

  // Fibers of vertices have cardinality k.
  for (VertexId t : f.target.vertex_ids()) {
    auto fiber = vertex_fiber(f, t);
    if (static_cast<int>(fiber.size()) != k)
      verdict.violations.push_back(
          "fiber over vertex " + std::to_string(t) + " has " +
          std::to_string(fiber.size()) + " points, expected " +
          std::to_string(k));
  }

  // Star bijectivity at every source vertex.
  for (VertexId y : f.source.vertex_ids()) {
    VertexId x = f.apply(y);
    std::set<Simplex> images;
    bool broken = false;
    std::size_t star_size = 0;
    for (int d = 0; d <= f.source.dimension() && !broken; ++d)
      for (const auto& s : f.source.simplices(d)) {
        if (!s.has_vertex(y)) continue;
        ++star_size;
        Simplex img = f.image(s);
        if (img.dim() != s.dim()) {
          verdict.violations.push_back("simplex " + str(s) +
                                       " collapses under the map");
          broken = true;
          break;
        }
        if (!images.insert(img).second) {
          verdict.violations.push_back("star of vertex " + std::to_string(y) +
                                       " is not mapped injectively");
          broken = true;
          break;
        }
      }
    if (broken) continue;
    std::size_t target_star = 0;
    for (int d = 0; d <= f.target.dimension(); ++d)
      for (const auto& t : f.target.simplices(d))
        if (t.has_vertex(x)) {
          ++target_star;
          if (!images.count(t)) {
            verdict.violations.push_back(
                "star of vertex " + std::to_string(y) + " misses " + str(t) +
                " over vertex " + std::to_string(x));
            broken = true;
          }
        }
    if (!broken && star_size != target_star)
      verdict.violations.push_back("star sizes differ at vertex " +
                                   std::to_string(y));
  }
  verdict.valid = verdict.violations.empty();
  return verdict;
}

namespace {

/// Shared construction: sheets glued along per-edge permutations.
CoveringMap build_total_space(const SimplicialComplex& x,
                              const std::map<Simplex, std::vector<int>>& omega,
                              int degree) {
  std::vector<VertexId> ids = x.vertex_ids();
  std::map<VertexId, int> rank;
  for (size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = static_cast<int>(i);

  auto transport = [&omega](VertexId u, VertexId v, int sheet) {
    if (u == v) return sheet;
    auto it = omega.find(Simplex::sorted({u, v}));
    if (it == omega.end()) throw InvalidInput("covering: missing edge permutation");
    return it->second[static_cast<size_t>(sheet)];
  };

  std::vector<Simplex> facets;
  for (const auto& fs : x.facets())
    for (int s = 0; s < degree; ++s) {
      std::vector<VertexId> vs;
      VertexId anchor = fs.min_vertex();
      for (VertexId v : fs.vertices())
        vs.push_back(rank.at(v) * degree + transport(anchor, v, s));
      facets.push_back(Simplex::sorted(std::move(vs)));
    }

  CoveringMap out;
  out.degree = degree;
  out.map.source = SimplicialComplex::closure_from_facets(std::move(facets));
  out.map.target = x;
  out.map.vertex_map.assign(ids.size() * static_cast<size_t>(degree), 0);
  for (size_t i = 0; i < ids.size(); ++i)
    for (int s = 0; s < degree; ++s)
      out.map.vertex_map[i * static_cast<size_t>(degree) +
                         static_cast<size_t>(s)] = ids[i];
  return out;
}

}  // namespace

CoveringMap covering_from_monodromy(const SimplicialComplex& x,
                                    const CosetTable& table) {
  auto pres = EdgePathPresentation::of(x, x.vertex_ids().front());
  if (static_cast<int>(table.action.size()) !=
      pres.presentation().generator_count)
    throw InvalidInput("covering_from_monodromy: table has wrong generator count");
  if (!table.satisfies(pres.presentation().relators))
    throw InvalidInput("covering_from_monodromy: table violates a relator");

  std::map<Simplex, std::vector<int>> omega;
  std::vector<int> id_perm(static_cast<size_t>(table.degree));
  for (int i = 0; i < table.degree; ++i) id_perm[static_cast<size_t>(i)] = i;
  for (const auto& e : x.simplices(1)) {
    Word w = pres.edge_word(e[0], e[1]);
    if (w.empty())
      omega[e] = id_perm;
    else
      omega[e] = table.action[static_cast<size_t>(std::abs(w[0])) - 1];
  }
  return build_total_space(x, omega, table.degree);
}

CoveringMap covering_from_cocycle(
    const SimplicialComplex& x,
    const std::map<Simplex, std::vector<int>>& edge_perm, int degree) {
  for (const auto& e : x.simplices(1)) {
    auto it = edge_perm.find(e);
    if (it == edge_perm.end())
      throw InvalidInput("covering_from_cocycle: no permutation for edge " +
                         str(e));
    if (static_cast<int>(it->second.size()) != degree)
      throw InvalidInput("covering_from_cocycle: permutation degree mismatch at " +
                         str(e));
  }
  if (x.dimension() >= 2)
    for (const auto& t : x.simplices(2)) {
      const auto& ab = edge_perm.at(Simplex{t[0], t[1]});
      const auto& bc = edge_perm.at(Simplex{t[1], t[2]});
      const auto& ac = edge_perm.at(Simplex{t[0], t[2]});
      for (int s = 0; s < degree; ++s)
        if (bc[static_cast<size_t>(ab[static_cast<size_t>(s)])] !=
            ac[static_cast<size_t>(s)])
          throw InvalidInput("covering_from_cocycle: cocycle condition fails on " +
                             str(t));
    }
  return build_total_space(x, edge_perm, degree);
}

CoveringMap identity_covering(const SimplicialComplex& x) {
  if (x.empty()) throw InvalidInput("identity_covering: empty complex");
  CoveringMap out;
  out.degree = 1;
  out.map.source = x;
  out.map.target = x;
  out.map.vertex_map.assign(static_cast<size_t>(x.vertex_ids().back()) + 1, 0);
  for (VertexId v : x.vertex_ids())
    out.map.vertex_map[static_cast<size_t>(v)] = v;
  return out;
}

std::vector<VertexId> vertex_fiber(const SimplicialMap& f, VertexId target) {
  std::vector<VertexId> fiber;
  for (VertexId y : f.source.vertex_ids())
    if (f.apply(y) == target) fiber.push_back(y);
  return fiber;
}

VertexId lift_edge(const SimplicialMap& f, VertexId y, VertexId target_w) {
  Simplex base_edge = Simplex::sorted({f.apply(y), target_w});
  VertexId found = -1;
  for (const auto& e : f.source.simplices(1)) {
    if (!e.has_vertex(y)) continue;
    if (f.image(e) == base_edge) {
      VertexId other = e[0] == y ? e[1] : e[0];
      if (found >= 0)
        throw InvalidInput("lift_edge: edge lift is not unique at vertex " +
                           std::to_string(y));
      found = other;
    }
  }
  if (found < 0)
    throw InvalidInput("lift_edge: no lift of edge " + str(base_edge) +
                       " through vertex " + std::to_string(y));
  return found;
}

CosetTable monodromy_of(const CoveringMap& cover,
                        const EdgePathPresentation& pres) {
  const auto& f = cover.map;
  VertexId base = pres.basepoint();
  std::vector<VertexId> fiber = vertex_fiber(f, base);
  if (static_cast<int>(fiber.size()) != cover.degree)
    throw InvalidInput("monodromy_of: fiber size differs from the degree");
  std::map<VertexId, int> sheet;
  for (size_t i = 0; i < fiber.size(); ++i) sheet[fiber[i]] = static_cast<int>(i);

  auto lift_path = [&f](VertexId start, const std::vector<VertexId>& path) {
    VertexId cur = start;
    for (size_t i = 1; i < path.size(); ++i) cur = lift_edge(f, cur, path[i]);
    return cur;
  };

  CosetTable t;
  t.degree = cover.degree;
  const auto& pp = pres.presentation();
  t.action.assign(static_cast<size_t>(pp.generator_count),
                  std::vector<int>(fiber.size()));
  for (int g = 0; g < pp.generator_count; ++g) {
    const Simplex& e = pp.origin[static_cast<size_t>(g)];
    auto to_u = pres.tree_path(e[0]);
    auto from_v = pres.tree_path(e[1]);
    std::reverse(from_v.begin(), from_v.end());
    for (int s = 0; s < cover.degree; ++s) {
      VertexId cur = lift_path(fiber[static_cast<size_t>(s)], to_u);
      cur = lift_edge(f, cur, e[1]);
      cur = lift_path(cur, from_v);
      t.action[static_cast<size_t>(g)][static_cast<size_t>(s)] = sheet.at(cur);
    }
  }
  return t;
}

}  // namespace plcov
