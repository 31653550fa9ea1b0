#include "plcov/pseudomanifold.hpp"

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

void check_is_subcomplex(const SimplicialComplex& x,
                         const SimplicialComplex& b, const char* who) {
  if (b.empty()) return;
  for (const auto& f : b.facets())
    if (!x.contains(f))
      throw InvalidInput(std::string(who) + ": " + str(f) +
                         " is not a simplex of the ambient complex");
}

}  // namespace

PseudomanifoldReport verify_pseudomanifold(const SimplicialComplex& x,
                                           PmMode mode) {
  if (x.empty()) throw InvalidInput("verify_pseudomanifold: empty complex");
  PseudomanifoldReport rep;
  rep.mode = mode;
  rep.dimension = x.dimension();
  int n = x.dimension();

  rep.is_pure = true;
  for (const auto& f : x.facets())
    if (f.dim() != n) {
      rep.is_pure = false;
      rep.violations.push_back("maximal simplex " + str(f) +
                               " has dimension " + std::to_string(f.dim()) +
                               " < " + std::to_string(n));
    }

  if (n >= 1) {
    for (const auto& r : x.simplices(n - 1)) rep.ridge_degrees[r] = 0;
    for (const auto& f : x.simplices(n))
      for (int i = 0; i < f.size(); ++i) rep.ridge_degrees[f.face_opposite(i)]++;
  }

  std::vector<Simplex> boundary_ridges;
  bool degrees_ok = true;
  for (const auto& [r, deg] : rep.ridge_degrees) {
    if (mode == PmMode::Closed) {
      if (deg != 2) {
        degrees_ok = false;
        rep.violations.push_back("ridge " + str(r) + " lies in " +
                                 std::to_string(deg) + " facets, expected 2");
      }
    } else {
      if (deg != 1 && deg != 2) {
        degrees_ok = false;
        rep.violations.push_back("ridge " + str(r) + " lies in " +
                                 std::to_string(deg) +
                                 " facets, expected 1 or 2");
      } else if (deg == 1) {
        boundary_ridges.push_back(r);
      }
    }
  }

  if (mode == PmMode::WithBoundary && !boundary_ridges.empty()) {
    rep.boundary_complex =
        SimplicialComplex::closure_from_facets(boundary_ridges);
    auto sub = verify_pseudomanifold(rep.boundary_complex, PmMode::Closed);
    if (!sub.valid) {
      degrees_ok = false;
      rep.violations.push_back(
          "degree-1 ridges do not form a closed pseudomanifold:");
      for (const auto& v : sub.violations)
        rep.violations.push_back("  boundary: " + v);
    }
  }

  rep.valid = rep.is_pure && degrees_ok;
  return rep;
}

DualCone dual_cone(const DerivedComplex& dc, const Simplex& center) {
  if (!dc.base().contains(center))
    throw InvalidInput("dual_cone: " + str(center) + " not in the complex");
  DualCone out;
  out.center = center;
  out.dim = dc.base().dimension() - center.dim();
  std::set<VertexId> keep;
  for (int b = 0; b < dc.barycenter_count(); ++b)
    if (dc.base_simplex(b).has_face(center)) keep.insert(b);
  out.cells = dc.complex().full_subcomplex(keep);
  return out;
}

SimplicialComplex coskeleton(const DerivedComplex& dc, int i) {
  int n = dc.base().dimension();
  if (i < 0 || i > n)
    throw InvalidInput("coskeleton: dimension " + std::to_string(i) +
                       " out of range [0, " + std::to_string(n) + "]");
  std::set<VertexId> keep;
  for (int b = 0; b < dc.barycenter_count(); ++b)
    if (dc.base_dim(b) >= n - i) keep.insert(b);
  return dc.complex().full_subcomplex(keep);
}

SimplicialComplex link_of(const DerivedComplex& dc, const Simplex& s) {
  if (!dc.base().contains(s))
    throw InvalidInput("link_of: " + str(s) + " not in the complex");
  std::set<VertexId> keep;
  for (int b = 0; b < dc.barycenter_count(); ++b) {
    const Simplex& t = dc.base_simplex(b);
    if (t != s && t.has_face(s)) keep.insert(b);
  }
  return dc.complex().full_subcomplex(keep);
}

NormalityReport is_normal(const SimplicialComplex& x) {
  auto closed = verify_pseudomanifold(x, PmMode::Closed);
  if (!closed.valid) {
    auto bd = verify_pseudomanifold(x, PmMode::WithBoundary);
    if (!bd.valid)
      throw InvalidInput("is_normal: input is not a pseudomanifold");
  }
  NormalityReport rep;
  rep.normal = true;
  int n = x.dimension();
  if (n <= 1) return rep;
  auto dc = DerivedComplex::of(x);
  for (int d = 0; d <= n - 2; ++d)
    for (const auto& s : x.simplices(d)) {
      auto link = link_of(dc, s);
      if (link.empty() || !link.is_connected()) {
        rep.normal = false;
        rep.witnesses.push_back(s);
      }
    }
  return rep;
}

SimplicialComplex complement_C(const DerivedComplex& dc,
                               const SimplicialComplex& b) {
  check_is_subcomplex(dc.base(), b, "complement_C");
  std::set<VertexId> keep;
  for (int i = 0; i < dc.barycenter_count(); ++i)
    if (!b.contains(dc.base_simplex(i))) keep.insert(i);
  return dc.complex().full_subcomplex(keep);
}

SimplicialComplex complement_S(const DerivedComplex& dc,
                               const SimplicialComplex& d_over_bary) {
  if (d_over_bary.empty()) return dc.base();
  // A union of closed dual cones is exactly a full subcomplex of T' on an
  // upward-closed set of barycenters.
  const std::vector<VertexId> center_ids = d_over_bary.vertex_ids();
  std::set<VertexId> centers(center_ids.begin(), center_ids.end());
  for (VertexId b : centers) {
    if (b < 0 || b >= dc.barycenter_count())
      throw InvalidInput("complement_S: vertex " + std::to_string(b) +
                         " is not a barycenter id");
    const Simplex& s = dc.base_simplex(b);
    for (int c = 0; c < dc.barycenter_count(); ++c)
      if (dc.base_simplex(c).has_face(s) && !centers.count(c))
        throw InvalidInput(
            "complement_S: input is not a union of dual cones (barycenter "
            "set not upward closed at " +
            str(s) + ")");
  }
  if (!(dc.complex().full_subcomplex(centers) == d_over_bary))
    throw InvalidInput(
        "complement_S: input is not the full subcomplex on its barycenters");

  auto s_complex = dc.base().subcomplex_where([&](const Simplex& s) {
    return !centers.count(dc.barycenter_of(s));
  });
  return s_complex;
}

std::optional<Simplex> fullness_violation(const SimplicialComplex& x,
                                          const SimplicialComplex& b) {
  check_is_subcomplex(x, b, "fullness");
  if (b.empty()) return std::nullopt;
  const std::vector<VertexId> b_ids = b.vertex_ids();
  std::set<VertexId> bv(b_ids.begin(), b_ids.end());
  for (int d = 1; d <= x.dimension(); ++d)
    for (const auto& s : x.simplices(d)) {
      bool all_in = true;
      for (VertexId v : s.vertices())
        if (!bv.count(v)) {
          all_in = false;
          break;
        }
      if (all_in && !b.contains(s)) return s;
    }
  return std::nullopt;
}

RegularNeighborhood regular_neighborhood(const DerivedComplex& dc,
                                         const SimplicialComplex& b) {
  if (auto bad = fullness_violation(dc.base(), b))
    throw InvalidInput("regular_neighborhood: B is not full, " + str(*bad) +
                       " has all vertices in B but is missing from it");
  RegularNeighborhood out;
  out.c = complement_C(dc, b);
  if (b.empty()) {
    out.n = SimplicialComplex();
    out.boundary = SimplicialComplex();
    return out;
  }
  const std::vector<VertexId> b_ids = b.vertex_ids();
  std::set<VertexId> bv(b_ids.begin(), b_ids.end());
  // A chain lies in some dual cone meeting B iff its smallest entry has a
  // vertex in B; smallest entry = smallest barycenter id.
  out.n = dc.complex().subcomplex_where([&](const Simplex& chain) {
    const Simplex& last = dc.base_simplex(chain.min_vertex());
    for (VertexId v : last.vertices())
      if (bv.count(v)) return true;
    return false;
  });
  if (out.c.empty())
    out.boundary = SimplicialComplex();
  else
    out.boundary = out.n.intersect(out.c);
  return out;
}

FullPass make_full(const SimplicialComplex& x, const SimplicialComplex& b) {
  check_is_subcomplex(x, b, "make_full");
  FullPass out{DerivedComplex::of(x), {}};
  if (b.empty()) return out;
  std::set<VertexId> keep;
  for (int i = 0; i < out.derived.barycenter_count(); ++i)
    if (b.contains(out.derived.base_simplex(i))) keep.insert(i);
  out.b_derived = out.derived.complex().full_subcomplex(keep);
  return out;
}

std::vector<JoinDecomposition> collar_certificate(const SimplicialComplex& x,
                                                  const SimplicialComplex& b) {
  if (auto bad = fullness_violation(x, b))
    throw InvalidInput("collar_certificate: B is not full, " + str(*bad) +
                       " has all vertices in B but is missing from it");
  if (b.empty() || b == x)
    throw InvalidInput("collar_certificate: B must be nonempty and != X");
  const std::vector<VertexId> b_ids = b.vertex_ids();
  std::set<VertexId> bv(b_ids.begin(), b_ids.end());
  std::vector<JoinDecomposition> out;
  for (int d = 1; d <= x.dimension(); ++d)
    for (const auto& s : x.simplices(d)) {
      Simplex alpha = s.restrict_to([&](VertexId v) { return bv.count(v) > 0; });
      Simplex beta = s.restrict_to([&](VertexId v) { return !bv.count(v); });
      if (alpha.empty() || beta.empty()) continue;  // not in the certificate domain
      out.push_back({s, alpha, beta});
    }
  return out;
}

}  // namespace plcov
