#include <set>

#include "doctest.h"

#include "corpus.hpp"
#include "plcov/derived.hpp"
#include "plcov/realization.hpp"

using namespace plcov;

TEST_CASE("closure from facets") {
  auto x = corpus::boundary_simplex(2);
  CHECK(x.count(0) == 4);
  CHECK(x.count(1) == 6);
  CHECK(x.count(2) == 4);
  CHECK(x.facets().size() == 4);

  auto e = SimplicialComplex::closure_from_facets({Simplex{0, 1}});
  CHECK(e.count(0) == 2);
  CHECK(e.count(1) == 1);

  auto rp2 = corpus::rp2_6();
  CHECK(rp2.count(0) == 6);
  CHECK(rp2.count(1) == 15);
  CHECK(rp2.count(2) == 10);

  CHECK_THROWS_AS(Simplex({1, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplex::closure_from_facets({}), InvalidInput);
}

TEST_CASE("closure is idempotent and facets are maximal") {
  for (auto& [name, x] : corpus::closed_corpus()) {
    CAPTURE(name);
    auto again = SimplicialComplex::closure_from_facets(x.facets());
    CHECK(again == x);
    CHECK(again.facets() == x.facets());
    // redundant faces in the input do not change the result
    auto noisy = x.facets();
    noisy.push_back(x.simplices(0).front());
    noisy.push_back(x.simplices(1).front());
    CHECK(SimplicialComplex::closure_from_facets(noisy) == x);
  }
}

TEST_CASE("skeleton") {
  auto s2 = corpus::boundary_simplex(2);
  auto graph = s2.skeleton(1);
  CHECK(graph.count(0) == 4);
  CHECK(graph.count(1) == 6);  // complete graph on 4 vertices
  CHECK(graph.euler_characteristic() == -2);
  CHECK(s2.skeleton(2) == s2);
  auto verts = corpus::rp2_6().skeleton(0);
  CHECK(verts.dimension() == 0);
  CHECK(verts.count(0) == 6);
  CHECK_THROWS_AS(s2.skeleton(3), InvalidInput);
  CHECK_THROWS_AS(s2.skeleton(-1), InvalidInput);

  for (auto& [name, x] : corpus::closed_corpus()) {
    CAPTURE(name);
    for (int i = 0; i < x.dimension(); ++i)
      CHECK(x.skeleton(i + 1).has_subcomplex(x.skeleton(i)));
  }
}

TEST_CASE("connectivity and components") {
  CHECK(corpus::boundary_simplex(2).is_connected());
  auto two_edges =
      SimplicialComplex::closure_from_facets({Simplex{0, 1}, Simplex{2, 3}});
  CHECK_FALSE(two_edges.is_connected());
  CHECK(two_edges.components().size() == 2);
  CHECK(two_edges.components()[0] == std::vector<VertexId>{0, 1});
  CHECK(two_edges.components()[1] == std::vector<VertexId>{2, 3});
  CHECK_THROWS_AS(SimplicialComplex().components(), InvalidInput);
}

TEST_CASE("euler characteristic") {
  CHECK(corpus::boundary_simplex(2).euler_characteristic() == 2);
  CHECK(corpus::rp2_6().euler_characteristic() == 1);
  CHECK(corpus::torus7().euler_characteristic() == 0);
  CHECK(corpus::boundary_simplex(2).skeleton(1).euler_characteristic() == -2);
}

TEST_CASE("barycentric subdivision counts") {
  auto triangle = corpus::solid_simplex(2);
  auto dc = DerivedComplex::of(triangle);
  CHECK(dc.complex().count(0) == 7);
  CHECK(dc.complex().count(2) == 6);

  auto s2 = corpus::boundary_simplex(2);
  auto ds2 = DerivedComplex::of(s2);
  CHECK(ds2.complex().count(0) == 14);
  CHECK(ds2.complex().count(2) == 24);
  CHECK(ds2.complex().euler_characteristic() == 2);

  auto pt = SimplicialComplex::closure_from_facets({Simplex{0}});
  CHECK(DerivedComplex::of(pt).complex().count(0) == 1);
  CHECK(DerivedComplex::of(pt).complex().dimension() == 0);
}

TEST_CASE("subdivision preserves euler characteristic and connectivity") {
  for (auto& [name, x] : corpus::closed_corpus()) {
    CAPTURE(name);
    auto dc = DerivedComplex::of(x);
    CHECK(dc.complex().dimension() == x.dimension());
    CHECK(dc.complex().euler_characteristic() == x.euler_characteristic());
    CHECK(dc.complex().is_connected() == x.is_connected());
    // top count multiplies by (n+1)! per facet
    std::size_t expect = 0;
    std::size_t fact = 1;
    for (int i = 2; i <= x.dimension() + 1; ++i) fact *= static_cast<std::size_t>(i);
    expect = x.count(x.dimension()) * fact;
    CHECK(dc.complex().count(dc.complex().dimension()) == expect);
  }
}

TEST_CASE("cone and join") {
  auto disc = corpus::cycle(3).cone(7);
  CHECK(disc.count(2) == 3);
  CHECK(disc.euler_characteristic() == 1);

  auto e1 = SimplicialComplex::closure_from_facets({Simplex{0, 1}});
  auto e2 = SimplicialComplex::closure_from_facets({Simplex{2, 3}});
  auto solid = e1.join(e2);
  CHECK(solid.dimension() == 3);
  CHECK(solid.count(3) == 1);  // the solid 3-simplex

  // two disjoint cycles coned to a single apex: two discs sharing the apex
  auto c3 = corpus::cycle(3);
  std::vector<Simplex> fs = c3.facets();
  for (int i = 0; i < 3; ++i)
    fs.push_back(Simplex::sorted({3 + i, 3 + (i + 1) % 3}));
  auto two_cycles = SimplicialComplex::closure_from_facets(fs);
  auto cones = two_cycles.cone(9);
  CHECK(cones.count(2) == 6);
  CHECK(cones.euler_characteristic() == 1);
  auto link_like = cones.full_subcomplex({0, 1, 2, 3, 4, 5});
  CHECK(link_like.components().size() == 2);

  CHECK_THROWS_AS(corpus::cycle(3).cone(0), InvalidInput);
  CHECK_THROWS_AS(e1.join(e1), InvalidInput);

  for (auto& [name, x] : corpus::closed_corpus()) {
    CAPTURE(name);
    int apex = x.vertex_ids().back() + 1;
    CHECK(x.cone(apex).euler_characteristic() == 1);
  }
}

TEST_CASE("rational realization") {
  auto s2 = corpus::boundary_simplex(2);
  auto r = realize(s2);
  CHECK(r.ambient_dim == 4);
  for (int v = 0; v < 4; ++v) {
    CHECK(r.point(v)[static_cast<size_t>(v)] == 1);
    Rational sum(0);
    for (auto& c : r.point(v)) sum += c;
    CHECK(sum == 1);
  }
  for (const auto& f : s2.facets()) {
    std::vector<std::vector<Rational>> pts;
    for (VertexId v : f.vertices()) pts.push_back(r.point(v));
    CHECK(affinely_independent(pts));
  }
}

TEST_CASE("derived realization: barycenters and perturbation") {
  auto s2 = corpus::boundary_simplex(2);
  auto dc = DerivedComplex::of(s2);
  auto base = realize(s2);
  auto plain = realize(dc, base);
  auto seeded = realize(dc, base, 42);
  auto seeded2 = realize(dc, base, 43);
  auto seeded_again = realize(dc, base, 42);
  CHECK(seeded.coords == seeded_again.coords);

  for (int b = 0; b < dc.barycenter_count(); ++b) {
    const Simplex& s = dc.base_simplex(b);
    if (s.dim() == 0) {
      CHECK(plain.point(b) == base.point(s[0]));
      CHECK(seeded.point(b) == base.point(s[0]));
      continue;
    }
    // perturbed points differ from the true barycenter...
    CHECK(seeded.point(b) != plain.point(b));
    // ...and the two seeds give disjoint barycenter sets
    CHECK(seeded.point(b) != seeded2.point(b));
    // all weights strictly positive: every coordinate of the simplex's
    // vertices contributes, so the support matches the vertex support
    for (VertexId v : s.vertices())
      CHECK(seeded.point(b)[static_cast<size_t>(v)] > 0);
    Rational sum(0);
    for (auto& c : seeded.point(b)) sum += c;
    CHECK(sum == 1);
  }
}
