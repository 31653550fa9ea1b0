#include "doctest.h"

#include "corpus.hpp"
#include "plcov/coset.hpp"

using namespace plcov;

TEST_CASE("edge path presentation of the circle") {
  auto p = EdgePathPresentation::of(corpus::cycle(3), 0);
  CHECK(p.presentation().generator_count == 1);
  CHECK(p.presentation().relators.empty());
  CHECK(p.presentation().origin[0] == Simplex{1, 2});
  auto ab = abelianization(p.presentation());
  CHECK(ab.free_rank == 1);
  CHECK(ab.divisors.empty());
  CHECK_THROWS_AS(
      EdgePathPresentation::of(SimplicialComplex::closure_from_facets(
                                   {Simplex{0, 1}, Simplex{2, 3}}),
                               0),
      InvalidInput);
}

TEST_CASE("abelianizations over the corpus") {
  auto s2 = EdgePathPresentation::of(corpus::boundary_simplex(2), 0);
  CHECK(s2.presentation().generator_count == 3);
  CHECK(s2.presentation().relators.size() == 4);
  CHECK(abelianization(s2.presentation()).trivial());

  auto rp2 = EdgePathPresentation::of(corpus::rp2_6(), 0);
  auto ab = abelianization(rp2.presentation());
  CHECK(ab.free_rank == 0);
  REQUIRE(ab.divisors.size() == 1);
  CHECK(ab.divisors[0] == 2);

  auto t = EdgePathPresentation::of(corpus::torus7(), 0);
  auto abt = abelianization(t.presentation());
  CHECK(abt.free_rank == 2);
  CHECK(abt.divisors.empty());
}

TEST_CASE("low index subgroups") {
  auto circle = EdgePathPresentation::of(corpus::cycle(3), 0).presentation();
  auto tables = low_index_subgroups(circle, 3);
  REQUIRE(tables.size() == 3);
  for (int d = 1; d <= 3; ++d) {
    int with_degree = 0;
    for (const auto& t : tables)
      if (t.degree == d) ++with_degree;
    CHECK(with_degree == 1);
  }

  auto s2 = EdgePathPresentation::of(corpus::boundary_simplex(2), 0).presentation();
  auto trivial = low_index_subgroups(s2, 3);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].degree == 1);

  auto rp2 = EdgePathPresentation::of(corpus::rp2_6(), 0).presentation();
  auto z2 = low_index_subgroups(rp2, 2);
  int idx2 = 0;
  for (const auto& t : z2)
    if (t.degree == 2) ++idx2;
  CHECK(idx2 == 1);

  // Z x Z has 1, 3, 4 subgroups of index 1, 2, 3
  auto torus = EdgePathPresentation::of(corpus::torus7(), 0).presentation();
  auto zz = low_index_subgroups(torus, 3);
  int by_degree[4] = {0, 0, 0, 0};
  for (const auto& t : zz) by_degree[t.degree]++;
  CHECK(by_degree[1] == 1);
  CHECK(by_degree[2] == 3);
  CHECK(by_degree[3] == 4);
}

TEST_CASE("every low-index table satisfies the relators and is transitive") {
  for (auto& [name, x] : corpus::closed_corpus()) {
    CAPTURE(name);
    auto p = EdgePathPresentation::of(x, 0).presentation();
    for (const auto& t : low_index_subgroups(p, 2)) {
      CHECK(t.is_transitive());
      CHECK(t.satisfies(p.relators));
      CHECK(conjugacy_canonical(t) == t);
    }
  }
}

TEST_CASE("hom enumeration") {
  auto circle = EdgePathPresentation::of(corpus::cycle(3), 0).presentation();
  CHECK(enumerate_homs(circle, FiniteGroup::cyclic(2)).size() == 2);
  CHECK(enumerate_homs(circle, FiniteGroup::cyclic(3)).size() == 3);

  auto rp2 = EdgePathPresentation::of(corpus::rp2_6(), 0).presentation();
  CHECK(enumerate_homs(rp2, FiniteGroup::cyclic(3)).size() == 1);
  CHECK(enumerate_homs(rp2, FiniteGroup::cyclic(2)).size() == 2);

  // Hom(Z x Z, S3) = commuting pairs in S3 = 18
  auto torus = EdgePathPresentation::of(corpus::torus7(), 0).presentation();
  auto s3 = FiniteGroup::symmetric(3);
  auto homs = enumerate_homs(torus, s3);
  CHECK(homs.size() == 18);
  for (const auto& h : homs) CHECK(hom_is_valid(torus, s3, h));

  auto sphere = EdgePathPresentation::of(corpus::boundary_simplex(2), 0).presentation();
  CHECK(enumerate_homs(sphere, s3).size() == 1);
}

TEST_CASE("hom count is invariant under re-rooted spanning trees") {
  auto z3 = FiniteGroup::cyclic(3);
  auto s3 = FiniteGroup::symmetric(3);
  for (auto& [name, x] : {std::pair<const char*, SimplicialComplex>{
                              "rp2", corpus::rp2_6()},
                          {"torus", corpus::torus7()},
                          {"circle", corpus::cycle(4)}}) {
    CAPTURE(name);
    auto p0 = EdgePathPresentation::of(x, x.vertex_ids().front()).presentation();
    auto p1 = EdgePathPresentation::of(x, x.vertex_ids().back()).presentation();
    CHECK(enumerate_homs(p0, z3).size() == enumerate_homs(p1, z3).size());
    CHECK(enumerate_homs(p0, s3).size() == enumerate_homs(p1, s3).size());
  }
}

TEST_CASE("kernel coset tables") {
  auto circle = EdgePathPresentation::of(corpus::cycle(3), 0).presentation();
  auto z3 = FiniteGroup::cyclic(3);
  auto t = kernel_coset_table(circle, z3, FiniteHom{{1}});
  CHECK(t.degree == 3);
  CHECK(t.action[0] == std::vector<int>{1, 2, 0});

  auto trivial = kernel_coset_table(circle, z3, FiniteHom{{0}});
  CHECK(trivial.degree == 1);

  auto torus = EdgePathPresentation::of(corpus::torus7(), 0).presentation();
  for (const auto& h : enumerate_homs(torus, z3)) {
    auto kt = kernel_coset_table(torus, z3, h);
    CHECK(kt.degree ==
          static_cast<int>(z3.subgroup_generated(h.images).size()));
    CHECK(kt.satisfies(torus.relators));
    CHECK(kt.is_transitive());
  }

  CHECK_THROWS_AS(
      kernel_coset_table(EdgePathPresentation::of(corpus::rp2_6(), 0).presentation(),
                         z3, FiniteHom{std::vector<int>(10, 1)}),
      InvalidInput);
}

TEST_CASE("budgets raise resource errors") {
  auto torus = EdgePathPresentation::of(corpus::torus7(), 0).presentation();
  EnumerationBudget tiny{3};
  CHECK_THROWS_AS(enumerate_homs(torus, FiniteGroup::symmetric(3), tiny),
                  ResourceExhausted);
  CHECK_THROWS_AS(low_index_subgroups(torus, 3, tiny), ResourceExhausted);
}

TEST_CASE("finite group constructions") {
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.label() == "S3");
  int transpositions = 0, threecycles = 0;
  for (int a = 0; a < 6; ++a) {
    if (s3.element_order(a) == 2) ++transpositions;
    if (s3.element_order(a) == 3) ++threecycles;
  }
  CHECK(transpositions == 3);
  CHECK(threecycles == 2);

  auto z6 = FiniteGroup::cyclic(6);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.subgroup_generated({2}).size() == 3);

  // round trip through an explicit table
  auto again = FiniteGroup::from_table(s3.table(), "S3-copy");
  CHECK(again.order() == 6);

  auto bad = s3.table();
  bad[1][1] = 0;
  bad[1][2] = 0;
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), InvalidInput);
}
