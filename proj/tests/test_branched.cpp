#include <set>

#include "doctest.h"

#include "corpus.hpp"
#include "plcov/branched.hpp"

using namespace plcov;

namespace {

SimplicialComplex poles() {
  return SimplicialComplex::closure_from_facets({Simplex{0}, Simplex{1}});
}

/// Degree-k cyclic cover of the annulus model of the octahedron minus its
/// poles, plus everything needed to complete it.
struct PoleSetup {
  SimplicialComplex octa = corpus::octahedron();
  SimplicialComplex v = poles();
  CoveringMap cover;

  explicit PoleSetup(int degree) {
    auto dc = DerivedComplex::of(octa);
    auto flat = flatten_sub(complement_C(dc, v));
    auto pres = EdgePathPresentation::of(flat.complex,
                                         flat.complex.vertex_ids().front());
    CosetTable wanted;
    wanted.degree = 0;
    for (const auto& t : low_index_subgroups(pres.presentation(), degree))
      if (t.degree == degree) {
        REQUIRE(wanted.degree == 0);  // annulus: one subgroup per index
        wanted = t;
      }
    REQUIRE(wanted.degree == degree);
    cover = covering_from_monodromy(flat.complex, wanted);
  }
};

}  // namespace

TEST_CASE("branched completion of pole covers of the octahedron") {
  for (int degree = 2; degree <= 5; ++degree) {
    CAPTURE(degree);
    PoleSetup setup(degree);
    auto res = branched_completion(setup.octa, setup.v, setup.cover);
    const auto& bc = res.covering;

    CHECK(bc.degree == degree);
    CHECK(verify_branched(bc).valid);
    auto pm = verify_pseudomanifold(bc.map.source, PmMode::Closed);
    CHECK(pm.valid);
    CHECK(bc.map.source.euler_characteristic() == 2);
    CHECK(bc.map.source.is_connected());
    CHECK(riemann_hurwitz_residual(bc) == 0);

    // fibers over the poles are singletons
    CHECK(res.fiber_size[static_cast<size_t>(
              res.derived.barycenter_of(Simplex{0}))] == 1);
    CHECK(res.fiber_size[static_cast<size_t>(
              res.derived.barycenter_of(Simplex{1}))] == 1);

    // the suspension structure: 4k equatorial derived vertices in the fiber
    // over each equator barycenter
    for (VertexId ring : {2, 3, 4, 5})
      CHECK(res.fiber_size[static_cast<size_t>(
                res.derived.barycenter_of(Simplex{ring}))] == degree);
  }
}

TEST_CASE("completion restricted off the branch is the input cover") {
  PoleSetup setup(3);
  auto res = branched_completion(setup.octa, setup.v, setup.cover);
  const auto& y = res.covering.map.source;

  // vertices over complement barycenters, in (barycenter, sheet) order
  std::vector<int> offset(res.fiber_size.size() + 1, 0);
  for (size_t b = 0; b < res.fiber_size.size(); ++b)
    offset[b + 1] = offset[b] + res.fiber_size[b];
  auto flat = flatten_sub(complement_C(res.derived, setup.v));

  std::map<VertexId, VertexId> to_cover;
  for (int b = 0; b < res.derived.barycenter_count(); ++b) {
    if (setup.v.contains(res.derived.base_simplex(b))) continue;
    auto fiber = vertex_fiber(setup.cover.map, flat.from_bary.at(b));
    REQUIRE(static_cast<int>(fiber.size()) ==
            res.fiber_size[static_cast<size_t>(b)]);
    for (size_t i = 0; i < fiber.size(); ++i)
      to_cover[offset[static_cast<size_t>(b)] + static_cast<int>(i)] = fiber[i];
  }
  std::set<VertexId> unbranched_ids;
  for (auto& [from, to] : to_cover) unbranched_ids.insert(from);
  auto off_branch = y.full_subcomplex(unbranched_ids);
  CHECK(off_branch.relabel(to_cover) == setup.cover.map.source);
}

TEST_CASE("completion of the identity cover of a normal base is the base") {
  auto octa = corpus::octahedron();
  auto dc = DerivedComplex::of(octa);
  auto flat = flatten_sub(complement_C(dc, poles()));
  auto pres = EdgePathPresentation::of(flat.complex, 0);
  auto cover = covering_from_monodromy(
      flat.complex, identity_table(pres.presentation().generator_count));
  auto res = branched_completion(octa, poles(), cover);
  for (int fs : res.fiber_size) CHECK(fs == 1);
  std::map<VertexId, VertexId> ident;
  for (VertexId v : res.covering.map.source.vertex_ids()) ident[v] = v;
  CHECK(res.covering.map.source.relabel(ident) == res.derived.complex());
  CHECK(riemann_hurwitz_residual(res.covering) == 0);
}

TEST_CASE("completion at a non-normal point splits the fiber") {
  // identity cover of the wedge complement: two points over the wedge vertex
  auto wedge = corpus::wedge_spheres();
  auto v = SimplicialComplex::closure_from_facets({Simplex{0}});
  auto dc = DerivedComplex::of(wedge);
  auto flat = flatten_sub(complement_C(dc, v));
  // two disjoint punctured spheres: no basepoint works, use the identity
  auto cover = identity_covering(flat.complex);
  auto res = branched_completion(wedge, v, cover);
  CHECK(res.fiber_size[static_cast<size_t>(dc.barycenter_of(Simplex{0}))] == 2);
  CHECK(verify_branched(res.covering).valid);
  auto pm = verify_pseudomanifold(res.covering.map.source, PmMode::Closed);
  CHECK(pm.valid);
  // the completion is the normalization: the wedge vertex is resolved
  CHECK(is_normal(res.covering.map.source).normal);
}

TEST_CASE("completion rejects bad inputs") {
  auto octa = corpus::octahedron();
  auto dc = DerivedComplex::of(octa);
  // codimension 1 branch locus
  auto ring = SimplicialComplex::closure_from_facets(
      {Simplex{2, 3}, Simplex{3, 4}, Simplex{4, 5}, Simplex{2, 5}});
  auto flat_ring = flatten_sub(complement_C(dc, ring));
  auto cover_r = identity_covering(flat_ring.complex);
  CHECK_THROWS_WITH_AS(branched_completion(octa, ring, cover_r),
                       doctest::Contains("codimension"), InvalidInput);

  // not full: two pole vertices of one triangle edge... use adjacent ring
  // vertices without their edge
  auto not_full = SimplicialComplex::closure_from_facets(
      {Simplex{2}, Simplex{3}});
  auto flat_nf = flatten_sub(complement_C(dc, not_full));
  auto cover_nf = identity_covering(flat_nf.complex);
  CHECK_THROWS_WITH_AS(branched_completion(octa, not_full, cover_nf),
                       doctest::Contains("full"), InvalidInput);

  // cover over the wrong base
  PoleSetup setup(2);
  auto wrong = setup.cover;
  wrong.map.target = corpus::cycle(4);
  CHECK_THROWS_AS(branched_completion(setup.octa, setup.v, wrong), InvalidInput);
}

TEST_CASE("riemann-hurwitz") {
  auto octa = corpus::octahedron();
  CHECK(riemann_hurwitz_residual(identity_branched(octa)) == 0);
  CHECK(riemann_hurwitz_residual(identity_branched(octa, poles())) == 0);
  CHECK_THROWS_AS(
      riemann_hurwitz_residual(identity_branched(corpus::boundary_simplex(3))),
      InvalidInput);
}

TEST_CASE("etale covering families over the 2-sphere") {
  auto s2 = corpus::boundary_simplex(2);
  auto dc = DerivedComplex::of(s2);
  auto t_prime = dc.complex();
  auto target = identity_branched(t_prime);

  // the two-element codimension-2 family: base vertices / facet barycenters
  std::set<VertexId> skel_barys, cosk_barys;
  for (int b = 0; b < dc.barycenter_count(); ++b) {
    if (dc.base_dim(b) == 0) skel_barys.insert(b);
    if (dc.base_dim(b) == 2) cosk_barys.insert(b);
  }
  auto b0 = t_prime.full_subcomplex(skel_barys);
  auto b1 = t_prime.full_subcomplex(cosk_barys);

  auto member = [&](const SimplicialComplex& b) {
    BranchedMorphism m;
    m.over_base = identity_branched(t_prime, b);
    m.phi = m.over_base.map;
    m.phi_branch = b;
    return m;
  };

  auto verdict = is_etale_covering_family(target, {member(b0), member(b1)});
  CHECK(verdict.valid);
  CHECK(verdict.covers);

  // a single member does not cover (its own branch is missed)
  auto partial = is_etale_covering_family(target, {member(b0)});
  CHECK_FALSE(partial.covers);

  // the identity member alone covers
  auto idm = member(SimplicialComplex{});
  CHECK(is_etale_covering_family(target, {idm}).covers);

  // empty family over a nonempty unbranched part
  CHECK_FALSE(is_etale_covering_family(target, {}).covers);
}

TEST_CASE("factorization between completions") {
  PoleSetup s3(3);
  auto a = branched_completion(s3.octa, s3.v, s3.cover);
  auto b = branched_completion(s3.octa, s3.v, s3.cover);
  auto g = factor_through(a.covering, b.covering);
  REQUIRE(g.has_value());
  for (VertexId v : a.covering.map.source.vertex_ids())
    CHECK(b.covering.map.apply((*g)[static_cast<size_t>(v)]) ==
          a.covering.map.apply(v));

  PoleSetup s2(2);
  auto c = branched_completion(s2.octa, s2.v, s2.cover);
  CHECK_FALSE(factor_through(a.covering, c.covering).has_value());
}
