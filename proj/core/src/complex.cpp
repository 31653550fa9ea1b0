#include "plcov/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace plcov {

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '{';
  for (int i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << s[i];
  }
  return os << '}';
}

Simplex Simplex::join(const Simplex& other) const {
  std::vector<VertexId> out;
  out.reserve(verts_.size() + other.verts_.size());
  std::merge(verts_.begin(), verts_.end(), other.verts_.begin(),
             other.verts_.end(), std::back_inserter(out));
  for (size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i] == out[i + 1])
      throw InvalidInput("join: vertex id collision at " +
                         std::to_string(out[i]));
  return Simplex(std::move(out));
}

SimplicialComplex SimplicialComplex::closure_from_facets(
    std::vector<Simplex> facets) {
  if (facets.empty()) throw InvalidInput("closure_from_facets: empty input");
  SimplicialComplex x;
  int dim = 0;
  for (const auto& f : facets) dim = std::max(dim, f.dim());
  x.by_dim_.resize(static_cast<size_t>(dim) + 1);

  std::vector<std::set<Simplex>> closure(static_cast<size_t>(dim) + 1);
  // Enumerate all nonempty subsets of each facet.
  for (const auto& f : facets) {
    int n = f.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> vs;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) vs.push_back(f[i]);
      Simplex s(std::move(vs));
      closure[static_cast<size_t>(s.dim())].insert(std::move(s));
    }
  }
  for (int d = 0; d <= dim; ++d)
    x.by_dim_[static_cast<size_t>(d)].assign(closure[static_cast<size_t>(d)].begin(),
                                             closure[static_cast<size_t>(d)].end());

  // Maximal simplices: not a proper face of anything present.
  for (int d = 0; d <= dim; ++d) {
    for (const auto& s : x.by_dim_[static_cast<size_t>(d)]) {
      bool maximal = true;
      for (int e = d + 1; e <= dim && maximal; ++e)
        for (const auto& t : x.by_dim_[static_cast<size_t>(e)])
          if (t.has_face(s)) {
            maximal = false;
            break;
          }
      if (maximal) x.facets_.push_back(s);
    }
  }
  return x;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> kEmpty;
  if (dim < 0 || dim > dimension()) return kEmpty;
  return by_dim_[static_cast<size_t>(dim)];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(simplex_count());
  for (const auto& level : by_dim_)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.dim() > dimension() || s.dim() < 0) return false;
  const auto& level = by_dim_[static_cast<size_t>(s.dim())];
  return std::binary_search(level.begin(), level.end(), s);
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

std::vector<VertexId> SimplicialComplex::vertex_ids() const {
  std::vector<VertexId> out;
  if (empty()) return out;
  out.reserve(by_dim_[0].size());
  for (const auto& v : by_dim_[0]) out.push_back(v[0]);
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dimension(); ++d)
    chi += (d % 2 == 0 ? 1LL : -1LL) *
           static_cast<long long>(by_dim_[static_cast<size_t>(d)].size());
  return chi;
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
  if (empty()) throw InvalidInput("skeleton: empty complex");
  if (i < 0 || i > dimension())
    throw InvalidInput("skeleton: dimension " + std::to_string(i) +
                       " out of range [0, " + std::to_string(dimension()) +
                       "]");
  SimplicialComplex x;
  x.by_dim_.assign(by_dim_.begin(), by_dim_.begin() + i + 1);
  for (int d = 0; d < i; ++d)
    for (const auto& s : x.by_dim_[static_cast<size_t>(d)]) {
      bool maximal = true;
      for (int e = d + 1; e <= i && maximal; ++e)
        for (const auto& t : x.by_dim_[static_cast<size_t>(e)])
          if (t.has_face(s)) {
            maximal = false;
            break;
          }
      if (maximal) x.facets_.push_back(s);
    }
  x.facets_.insert(x.facets_.end(), x.by_dim_[static_cast<size_t>(i)].begin(),
                   x.by_dim_[static_cast<size_t>(i)].end());
  return x;
}

namespace {
// Union-find over a map keyed by vertex id.
struct DisjointSets {
  std::map<VertexId, VertexId> parent;
  VertexId find(VertexId v) {
    auto it = parent.find(v);
    if (it == parent.end() || it->second == v) return v;
    VertexId root = find(it->second);
    it->second = root;
    return root;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // smaller id wins, keeps ordering deterministic
  }
};
}  // namespace

std::vector<std::vector<VertexId>> SimplicialComplex::components() const {
  if (empty()) throw InvalidInput("components: empty complex");
  DisjointSets ds;
  for (VertexId v : vertex_ids()) ds.parent[v] = v;
  if (dimension() >= 1)
    for (const auto& e : by_dim_[1]) ds.unite(e[0], e[1]);
  std::map<VertexId, std::vector<VertexId>> groups;
  for (VertexId v : vertex_ids()) groups[ds.find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool SimplicialComplex::is_connected() const { return components().size() == 1; }

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& other) const {
  std::vector<Simplex> joined;
  for (const auto& f : facets_)
    for (const auto& g : other.facets()) joined.push_back(f.join(g));
  return closure_from_facets(std::move(joined));
}

SimplicialComplex SimplicialComplex::cone(VertexId apex) const {
  if (has_vertex(apex))
    throw InvalidInput("cone: apex id " + std::to_string(apex) +
                       " already present");
  return join(closure_from_facets({Simplex{apex}}));
}

bool SimplicialComplex::has_subcomplex(const SimplicialComplex& other) const {
  for (const auto& f : other.facets())
    if (!contains(f)) return false;
  return true;
}

SimplicialComplex SimplicialComplex::full_subcomplex(
    const std::set<VertexId>& verts) const {
  return subcomplex_where([&verts](const Simplex& s) {
    for (VertexId v : s.vertices())
      if (!verts.count(v)) return false;
    return true;
  });
}

SimplicialComplex SimplicialComplex::subcomplex_where(
    const std::function<bool(const Simplex&)>& pred) const {
  // Restricting every facet and re-closing is enough when the predicate is
  // face-closed, but the general path below also covers predicates that are
  // not (callers in this codebase only pass face-closed ones).
  std::vector<Simplex> kept;
  for (int d = dimension(); d >= 0; --d)
    for (const auto& s : by_dim_[static_cast<size_t>(d)])
      if (pred(s)) kept.push_back(s);
  if (kept.empty()) return SimplicialComplex();
  return closure_from_facets(std::move(kept));
}

SimplicialComplex SimplicialComplex::intersect(
    const SimplicialComplex& other) const {
  std::vector<Simplex> shared;
  int dim = std::min(dimension(), other.dimension());
  for (int d = 0; d <= dim; ++d)
    for (const auto& s : by_dim_[static_cast<size_t>(d)])
      if (other.contains(s)) shared.push_back(s);
  if (shared.empty()) return SimplicialComplex();
  return closure_from_facets(std::move(shared));
}

SimplicialComplex SimplicialComplex::unite(const SimplicialComplex& other) const {
  std::vector<Simplex> fs = facets_;
  fs.insert(fs.end(), other.facets().begin(), other.facets().end());
  return closure_from_facets(std::move(fs));
}

SimplicialComplex SimplicialComplex::relabel(
    const std::map<VertexId, VertexId>& map) const {
  std::vector<Simplex> fs;
  fs.reserve(facets_.size());
  for (const auto& f : facets_) {
    std::vector<VertexId> vs;
    vs.reserve(static_cast<size_t>(f.size()));
    for (VertexId v : f.vertices()) {
      auto it = map.find(v);
      if (it == map.end())
        throw InvalidInput("relabel: vertex " + std::to_string(v) +
                           " missing from map");
      vs.push_back(it->second);
    }
    fs.push_back(Simplex::sorted(std::move(vs)));
  }
  return closure_from_facets(std::move(fs));
}

SimplicialComplex SimplicialComplex::densify(
    std::vector<VertexId>* to_ambient) const {
  std::vector<VertexId> ids = vertex_ids();
  std::map<VertexId, VertexId> map;
  for (size_t i = 0; i < ids.size(); ++i)
    map[ids[i]] = static_cast<VertexId>(i);
  if (to_ambient) *to_ambient = ids;
  return relabel(map);
}

std::string f_vector_string(const SimplicialComplex& x) {
  std::ostringstream os;
  os << '(';
  for (int d = 0; d <= x.dimension(); ++d) {
    if (d) os << ", ";
    os << x.count(d);
  }
  os << ')';
  return os.str();
}

}  // namespace plcov
