#include "plcov/branched.hpp"

#include <algorithm>
#include <numeric>
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

SimplicialComplex BranchedCovering::branch_image() const {
  if (branch.empty()) return {};
  std::vector<Simplex> facets;
  for (const auto& f : branch.facets()) facets.push_back(map.image(f));
  return SimplicialComplex::closure_from_facets(std::move(facets));
}

BranchedCovering identity_branched(const SimplicialComplex& x,
                                   SimplicialComplex branch) {
  BranchedCovering bc;
  bc.map.source = x;
  bc.map.target = x;
  bc.map.vertex_map.resize(static_cast<size_t>(x.vertex_ids().back()) + 1);
  for (VertexId v : x.vertex_ids())
    bc.map.vertex_map[static_cast<size_t>(v)] = v;
  bc.branch = std::move(branch);
  bc.degree = 1;
  return bc;
}

BranchedVerdict verify_branched(const BranchedCovering& bc) {
  BranchedVerdict verdict;
  auto& out = verdict.violations;
  try {
    validate_simplicial(bc.map);
  } catch (const InvalidInput& err) {
    out.push_back(err.what());
    return verdict;
  }
  const auto& src = bc.map.source;
  const auto& tgt = bc.map.target;

  if (!bc.branch.empty() && !src.has_subcomplex(bc.branch))
    out.push_back("branch is not a subcomplex of the source");
  if (!bc.branch.empty() && src.dimension() - bc.branch.dimension() < 2)
    out.push_back("branch has codimension " +
                  std::to_string(src.dimension() - bc.branch.dimension()) +
                  " < 2");
  if (!out.empty()) return verdict;

  // Finite fibers: no simplex may collapse.
  for (int d = 0; d <= src.dimension(); ++d)
    for (const auto& s : src.simplices(d))
      if (bc.map.image(s).dim() != d) {
        out.push_back("simplex " + str(s) + " collapses under the map");
        return verdict;
      }

  SimplicialComplex b_img = bc.branch_image();

  // The restriction away from the branch maps into the complement of the
  // branch image.
  for (int d = 0; d <= src.dimension(); ++d)
    for (const auto& s : src.simplices(d))
      if (!bc.branch.contains(s) && b_img.contains(bc.map.image(s)))
        out.push_back("unbranched simplex " + str(s) +
                      " maps into the branch image");

  // Even covering of every open simplex off the branch image.
  std::map<Simplex, int> preimage_count;
  for (int d = 0; d <= src.dimension(); ++d)
    for (const auto& s : src.simplices(d))
      if (!bc.branch.contains(s)) preimage_count[bc.map.image(s)]++;
  for (int d = 0; d <= tgt.dimension(); ++d)
    for (const auto& t : tgt.simplices(d)) {
      if (b_img.contains(t)) continue;
      auto it = preimage_count.find(t);
      int got = it == preimage_count.end() ? 0 : it->second;
      if (got != bc.degree)
        out.push_back("open simplex " + str(t) + " is covered " +
                      std::to_string(got) + " times, expected " +
                      std::to_string(bc.degree));
    }

  // Unique upward lifting off the branch.
  for (int d = 0; d < src.dimension(); ++d)
    for (const auto& s : src.simplices(d)) {
      if (bc.branch.contains(s)) continue;
      Simplex fs = bc.map.image(s);
      for (const auto& t : tgt.simplices(d + 1)) {
        if (!t.has_face(fs) || b_img.contains(t)) continue;
        int lifts = 0;
        for (const auto& sp : src.simplices(d + 1))
          if (sp.has_face(s) && bc.map.image(sp) == t) ++lifts;
        if (lifts != 1)
          out.push_back("simplex " + str(s) + " has " + std::to_string(lifts) +
                        " lifts of cofacet " + str(t));
      }
    }

  verdict.valid = out.empty();
  return verdict;
}

namespace {

/// Constant-time-ish unique edge lifts through a covering map.
struct EdgeLifter {
  std::map<std::pair<VertexId, VertexId>, VertexId> table;

  explicit EdgeLifter(const SimplicialMap& f) {
    for (const auto& e : f.source.simplices(1)) {
      VertexId a = e[0], b = e[1];
      auto put = [&](VertexId from, VertexId target, VertexId to) {
        auto key = std::make_pair(from, target);
        auto [it, fresh] = table.emplace(key, to);
        if (!fresh)
          throw InvalidInput("covering: edge lift not unique at vertex " +
                             std::to_string(from));
      };
      put(a, f.apply(b), b);
      put(b, f.apply(a), a);
    }
  }

  VertexId lift(VertexId from, VertexId target) const {
    auto it = table.find({from, target});
    if (it == table.end())
      throw InvalidInput("covering: no edge lift from vertex " +
                         std::to_string(from) + " over target " +
                         std::to_string(target));
    return it->second;
  }
};

struct KeyUnionFind {
  std::map<std::pair<int, int>, std::pair<int, int>> parent;
  std::pair<int, int> find(std::pair<int, int> k) {
    auto it = parent.find(k);
    if (it == parent.end() || it->second == k) return k;
    auto root = find(it->second);
    it->second = root;
    return root;
  }
  void unite(std::pair<int, int> a, std::pair<int, int> b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

CompletionResult branched_completion(const SimplicialComplex& x,
                                     const SimplicialComplex& v,
                                     const CoveringMap& cover) {
  if (!v.empty()) {
    if (auto bad = fullness_violation(x, v))
      throw InvalidInput("branched_completion: V is not full, " + str(*bad) +
                         " has all vertices in V but is missing");
    if (x.dimension() - v.dimension() < 2)
      throw InvalidInput("branched_completion: V has codimension " +
                         std::to_string(x.dimension() - v.dimension()) +
                         " < 2");
  }
  CompletionResult res{{}, DerivedComplex::of(x), {}};
  const DerivedComplex& dc = res.derived;
  auto c_sub = complement_C(dc, v);
  auto flat = flatten_sub(c_sub);
  if (!(cover.map.target == flat.complex))
    throw InvalidInput(
        "branched_completion: the cover must live over the flattened "
        "complement model C(V,X)");

  int m = dc.barycenter_count();
  std::vector<bool> in_v(static_cast<size_t>(m), false);
  for (int b = 0; b < m; ++b)
    if (v.contains(dc.base_simplex(b))) in_v[static_cast<size_t>(b)] = true;

  // Sheets over complement barycenters come straight from the cover.
  std::vector<std::vector<VertexId>> cover_sheets(static_cast<size_t>(m));
  std::map<VertexId, int> cover_sheet_index;
  for (int b = 0; b < m; ++b) {
    if (in_v[static_cast<size_t>(b)]) continue;
    auto fiber = vertex_fiber(cover.map, flat.from_bary.at(b));
    for (size_t i = 0; i < fiber.size(); ++i)
      cover_sheet_index[fiber[i]] = static_cast<int>(i);
    cover_sheets[static_cast<size_t>(b)] = std::move(fiber);
  }
  EdgeLifter lifter(cover.map);

  std::vector<int> nsheets(static_cast<size_t>(m), 0);
  for (int b = 0; b < m; ++b)
    if (!in_v[static_cast<size_t>(b)])
      nsheets[static_cast<size_t>(b)] =
          static_cast<int>(cover_sheets[static_cast<size_t>(b)].size());

  // comp_at[b]: for V-barycenters, the component index at b of every sheet
  // over the link of b's simplex.
  std::vector<std::map<std::pair<int, int>, int>> comp_at(
      static_cast<size_t>(m));

  auto lift_down = [&](int b1, int i1, int b2) -> int {
    if (!in_v[static_cast<size_t>(b2)]) {
      VertexId y1 = cover_sheets[static_cast<size_t>(b1)][static_cast<size_t>(i1)];
      VertexId y2 = lifter.lift(y1, flat.from_bary.at(b2));
      return cover_sheet_index.at(y2);
    }
    return comp_at[static_cast<size_t>(b2)].at({b1, i1});
  };

  // Process the strata of V from the top dimension downward; barycenter ids
  // are sorted by dimension, so descending id order is descending dimension.
  for (int b = m - 1; b >= 0; --b) {
    if (!in_v[static_cast<size_t>(b)]) continue;
    const Simplex& sigma = dc.base_simplex(b);
    auto link = link_of(dc, sigma);
    KeyUnionFind uf;
    std::vector<std::pair<int, int>> keys;
    for (VertexId lb : link.vertex_ids())
      for (int i = 0; i < nsheets[static_cast<size_t>(lb)]; ++i) {
        keys.emplace_back(lb, i);
        uf.parent[{lb, i}] = {lb, i};
      }
    if (link.dimension() >= 1)
      for (const auto& e : link.simplices(1)) {
        int lo = e[0], hi = e[1];  // hi is the larger base simplex
        for (int i = 0; i < nsheets[static_cast<size_t>(hi)]; ++i)
          uf.unite({hi, i}, {lo, lift_down(hi, i, lo)});
      }
    std::map<std::pair<int, int>, int> root_index;
    for (const auto& k : keys) {
      auto root = uf.find(k);
      root_index.emplace(root, static_cast<int>(root_index.size()));
    }
    for (const auto& k : keys)
      comp_at[static_cast<size_t>(b)][k] = root_index.at(uf.find(k));
    nsheets[static_cast<size_t>(b)] = static_cast<int>(root_index.size());
    if (nsheets[static_cast<size_t>(b)] == 0)
      throw InvalidInput("branched_completion: simplex " + str(sigma) +
                         " of V has an empty link");
  }

  // Dense Y vertex ids in (barycenter, sheet) order.
  std::vector<int> offset(static_cast<size_t>(m) + 1, 0);
  for (int b = 0; b < m; ++b)
    offset[static_cast<size_t>(b) + 1] =
        offset[static_cast<size_t>(b)] + nsheets[static_cast<size_t>(b)];

  std::vector<Simplex> y_facets;
  for (const auto& chain : dc.complex().facets()) {
    int b_top = chain.max_vertex();
    for (int s = 0; s < nsheets[static_cast<size_t>(b_top)]; ++s) {
      std::vector<VertexId> vs;
      std::vector<std::pair<int, int>> sheet_of;  // (bary, sheet) per vertex
      for (VertexId b : chain.vertices()) {
        int sheet = b == b_top ? s : lift_down(b_top, s, b);
        sheet_of.emplace_back(b, sheet);
        vs.push_back(offset[static_cast<size_t>(b)] + sheet);
      }
      // pairwise consistency of the lift (construction invariant)
      for (size_t a = 0; a < sheet_of.size(); ++a)
        for (size_t c = a + 1; c < sheet_of.size(); ++c) {
          auto [b_hi, s_hi] = sheet_of[c];
          auto [b_lo, s_lo] = sheet_of[a];
          if (lift_down(b_hi, s_hi, b_lo) != s_lo)
            throw std::logic_error(
                "branched_completion: inconsistent chain lift");
        }
      y_facets.push_back(Simplex::sorted(std::move(vs)));
    }
  }

  BranchedCovering bc;
  bc.degree = cover.degree;
  bc.map.source = SimplicialComplex::closure_from_facets(std::move(y_facets));
  bc.map.target = dc.complex();
  bc.map.vertex_map.assign(static_cast<size_t>(offset[static_cast<size_t>(m)]), 0);
  for (int b = 0; b < m; ++b)
    for (int s = 0; s < nsheets[static_cast<size_t>(b)]; ++s)
      bc.map.vertex_map[static_cast<size_t>(offset[static_cast<size_t>(b)] + s)] = b;

  // Branch locus: the lifts of the derived subdivision of V.
  if (!v.empty()) {
    std::set<VertexId> v_barys;
    for (int b = 0; b < m; ++b)
      if (in_v[static_cast<size_t>(b)]) v_barys.insert(b);
    auto v_derived = dc.complex().full_subcomplex(v_barys);
    std::vector<Simplex> b_facets;
    for (const auto& chain : v_derived.facets()) {
      int b_top = chain.max_vertex();
      for (int s = 0; s < nsheets[static_cast<size_t>(b_top)]; ++s) {
        std::vector<VertexId> vs;
        for (VertexId b : chain.vertices()) {
          int sheet = b == b_top ? s : lift_down(b_top, s, b);
          vs.push_back(offset[static_cast<size_t>(b)] + sheet);
        }
        b_facets.push_back(Simplex::sorted(std::move(vs)));
      }
    }
    bc.branch = SimplicialComplex::closure_from_facets(std::move(b_facets));
  }

  res.covering = std::move(bc);
  res.fiber_size = std::move(nsheets);
  return res;
}

long long riemann_hurwitz_residual(const BranchedCovering& bc) {
  if (bc.map.source.dimension() != 2 || bc.map.target.dimension() != 2)
    throw InvalidInput("riemann_hurwitz: total and base must be surfaces");
  long long chi_y = bc.map.source.euler_characteristic();
  long long chi_x = bc.map.target.euler_characteristic();
  long long defect = 0;
  SimplicialComplex b_img = bc.branch_image();
  if (!b_img.empty()) {
    if (b_img.dimension() != 0)
      throw InvalidInput("riemann_hurwitz: branch image must be discrete");
    for (VertexId x : b_img.vertex_ids())
      defect += bc.degree -
                static_cast<long long>(vertex_fiber(bc.map, x).size());
  }
  return chi_y - bc.degree * chi_x + defect;
}

EtaleFamilyVerdict is_etale_covering_family(
    const BranchedCovering& target, const std::vector<BranchedMorphism>& family,
    MorphismBranchRule rule) {
  EtaleFamilyVerdict verdict;
  auto& out = verdict.violations;

  for (size_t i = 0; i < family.size(); ++i) {
    const auto& mor = family[i];
    std::string who = "member " + std::to_string(i);
    // commuting triangle: f o phi == f_i, vertexwise
    for (VertexId y : mor.over_base.map.source.vertex_ids()) {
      int via_phi = target.map.apply(mor.phi.apply(y));
      if (via_phi != mor.over_base.map.apply(y)) {
        out.push_back(who + ": triangle does not commute at vertex " +
                      std::to_string(y));
        break;
      }
    }
    // the morphism itself is a branched covering onto Y
    BranchedCovering phi_cov{mor.phi, mor.phi_branch, 0};
    // degree inferred: fibers over target vertices off the branch image
    phi_cov.degree = mor.over_base.degree / std::max(1, target.degree);
    auto sub = verify_branched(phi_cov);
    if (!sub.valid)
      for (const auto& msg : sub.violations) out.push_back(who + ": " + msg);
    // branch condition
    if (rule == MorphismBranchRule::AsPrinted) {
      // target branch contained in the image of the member's branch
      SimplicialComplex img = BranchedCovering{mor.phi, mor.phi_branch, 0}
                                  .branch_image();
      SimplicialComplex img_of_member;
      if (!mor.phi_branch.empty()) {
        std::vector<Simplex> fs;
        for (const auto& f : mor.phi_branch.facets())
          fs.push_back(mor.phi.image(f));
        img_of_member = SimplicialComplex::closure_from_facets(std::move(fs));
      }
      if (!target.branch.empty() &&
          (img_of_member.empty() ||
           !img_of_member.has_subcomplex(target.branch)))
        out.push_back(who + ": target branch not contained in phi(branch)");
    } else {
      for (int d = 0; d <= mor.phi.source.dimension(); ++d)
        for (const auto& s : mor.phi.source.simplices(d))
          if (target.branch.contains(mor.phi.image(s)) &&
              !mor.phi_branch.contains(s)) {
            out.push_back(who + ": preimage of target branch leaks out of "
                                "the member branch at " + str(s));
            d = mor.phi.source.dimension() + 1;
            break;
          }
    }
  }
  verdict.valid = out.empty();

  // Covering condition: unbranched images jointly cover Y - B.
  bool covers = true;
  const auto& y = target.map.source;
  for (int d = 0; d <= y.dimension() && covers; ++d)
    for (const auto& t : y.simplices(d)) {
      if (target.branch.contains(t)) continue;
      bool hit = false;
      for (const auto& mor : family) {
        for (int e = d; e <= mor.phi.source.dimension() && !hit; ++e)
          for (const auto& s : mor.phi.source.simplices(e))
            if (!mor.phi_branch.contains(s) && mor.phi.image(s) == t) {
              hit = true;
              break;
            }
        if (hit) break;
      }
      if (!hit) {
        covers = false;
        verdict.violations.push_back("open simplex " + str(t) +
                                     " of the target is not covered");
        break;
      }
    }
  verdict.covers = covers;
  return verdict;
}

std::optional<std::vector<int>> factor_through(const BranchedCovering& bc1,
                                               const BranchedCovering& bc2) {
  const auto& y1 = bc1.map.source;
  const auto& y2 = bc2.map.source;
  std::vector<VertexId> order = y1.vertex_ids();
  std::vector<int> g(static_cast<size_t>(order.back()) + 1, -1);

  // candidates: vertices of Y2 over the same base vertex
  std::map<VertexId, std::vector<VertexId>> candidates;
  for (VertexId v : order) candidates[v] = vertex_fiber(bc2.map, bc1.map.apply(v));

  auto consistent = [&](VertexId just_set) {
    for (int d = 1; d <= y1.dimension(); ++d)
      for (const auto& s : y1.simplices(d)) {
        if (!s.has_vertex(just_set)) continue;
        std::vector<VertexId> img;
        bool complete = true;
        for (VertexId v : s.vertices()) {
          if (g[static_cast<size_t>(v)] < 0) {
            complete = false;
            break;
          }
          img.push_back(g[static_cast<size_t>(v)]);
        }
        if (!complete) continue;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
          return false;  // collapse
        if (!y2.contains(Simplex(img))) return false;
      }
    return true;
  };

  auto dfs = [&](auto&& self, size_t idx) -> bool {
    if (idx == order.size()) return true;
    VertexId v = order[idx];
    for (VertexId w : candidates[v]) {
      g[static_cast<size_t>(v)] = w;
      if (consistent(v) && self(self, idx + 1)) return true;
      g[static_cast<size_t>(v)] = -1;
    }
    return false;
  };
  if (dfs(dfs, 0)) return g;
  return std::nullopt;
}

}  // namespace plcov
