#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/group.hpp"
#include "semicat/semigroup.hpp"
#include "semicat/semilattice.hpp"

using namespace semicat;

namespace {

FiniteSemigroup group_semigroup(const FiniteGroup &g) {
  return semigroup_from_table(g.table);
}

FiniteSemigroup left_zero(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = x;
  return semigroup_from_table(t);
}

FiniteSemigroup null_semigroup(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  return semigroup_from_table(t);
}

FiniteSemigroup trivial() { return null_semigroup(1); }

// Diamond: 0 < 1, 2 < 3 with 1, 2 incomparable.
Semilattice diamond() {
  return semilattice_from_table(
      {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}});
}

using ConnectorMap = std::map<std::pair<int, int>, std::vector<int>>;

// 2-chain of copies of Z2 glued by the identity: the Clifford semigroup
// that is also Z2 x (2-chain).
StrongSemilattice clifford_pair() {
  const auto z2 = group_semigroup(cyclic_group(2));
  return sss_construct(chain_semilattice(2), {z2, z2},
                       ConnectorMap{{{1, 0}, {0, 1}}});
}

} // namespace

TEST_CASE("semilattice validation") {
  CHECK_THROWS_WITH_AS(semilattice_from_table({}),
                       doctest::Contains("ParseError"), ValidationError);
  CHECK_THROWS_WITH_AS(semilattice_from_table({{0, 0}, {0, 0}}),
                       doctest::Contains("NotIdempotent"), ValidationError);
  CHECK_THROWS_WITH_AS(semilattice_from_table({{0, 1}, {0, 1}}),
                       doctest::Contains("NotCommutative"), ValidationError);

  const auto y = diamond();
  CHECK(y.order == 4);
  CHECK(semilattice_zero(y) == 0);
  CHECK(y.leq(1, 3));
  CHECK(!y.leq(1, 2));
  CHECK(y.meet_of(1, 2) == 0);

  const auto chain = chain_semilattice(3);
  CHECK(semilattice_zero(chain) == 0);
  CHECK(chain.meet_of(2, 1) == 1);

  // As a semigroup: commutative band.
  const auto sg = semilattice_as_semigroup(y);
  for (int a = 0; a < 4; ++a)
    CHECK(sg.mul(a, a) == a);
}

TEST_CASE("semilattice automorphisms of the diamond") {
  const auto autos = semilattice_automorphisms(diamond());
  REQUIRE(autos.size() == 2);
  CHECK(autos[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(autos[1] == std::vector<int>{0, 2, 1, 3});

  CHECK(semilattice_automorphisms(chain_semilattice(4)).size() == 1);
}

TEST_CASE("sss_construct validates connectors") {
  const auto z2 = group_semigroup(cyclic_group(2));
  const auto chain2 = chain_semilattice(2);

  CHECK_THROWS_WITH_AS(
      sss_construct(chain2, {z2, z2}, ConnectorMap{{{0, 1}, {0, 1}}}),
      doctest::Contains("ParseError"), ValidationError);
  CHECK_THROWS_WITH_AS(sss_construct(chain2, {z2, z2}, ConnectorMap{}),
                       doctest::Contains("ParseError"), ValidationError);
  // x -> x+1 is not a homomorphism of Z2.
  CHECK_THROWS_WITH_AS(
      sss_construct(chain2, {z2, z2}, ConnectorMap{{{1, 0}, {1, 0}}}),
      doctest::Contains("ConnectorNotHomomorphism"), ValidationError);

  // Functoriality on a 3-chain of Klein groups: psi_{2,1} and psi_{1,0}
  // are projections to different factors, psi_{2,0} the identity.
  const auto v4 = group_semigroup(klein_group());
  const std::vector<int> first_factor{0, 0, 2, 2};  // (a,b) -> (a,0)
  const std::vector<int> second_factor{0, 1, 0, 1}; // (a,b) -> (0,b)
  const std::vector<int> id4{0, 1, 2, 3};
  CHECK_THROWS_WITH_AS(
      sss_construct(chain_semilattice(3), {v4, v4, v4},
                    ConnectorMap{{{1, 0}, first_factor},
                                 {{2, 1}, second_factor},
                                 {{2, 0}, id4}}),
      doctest::Contains("ConnectorNotFunctorial"), ValidationError);
  // Same data with the composite as psi_{2,0} is fine.
  const auto s = sss_construct(chain_semilattice(3), {v4, v4, v4},
                               ConnectorMap{{{1, 0}, first_factor},
                                            {{2, 1}, second_factor},
                                            {{2, 0}, {0, 0, 0, 0}}});
  CHECK(s.flatten().order == 12);
}

TEST_CASE("flattened multiplication uses the meet component") {
  const auto s = clifford_pair();
  CHECK(s.flatten().order == 4);
  CHECK(s.global_index(0, 1) == 1);
  CHECK(s.global_index(1, 0) == 2);
  CHECK(s.locate(3) == std::make_pair(1, 1));

  // Products of top elements land upstairs, mixed products downstairs.
  const auto &f = s.flatten();
  CHECK(f.mul(2, 3) == 3); // (1,0)(1,1) = (1,1) upstairs
  CHECK(f.mul(2, 1) == 1); // psi(0) + 1 downstairs
  CHECK(f.mul(3, 3) == 2);
  CHECK(f.mul(0, 2) == 0);

  // Idempotents: identity of each copy.
  CHECK(idempotents(f) == std::vector<int>{0, 2});

  // The same data with the constant connector is the 0-direct union-like
  // composition; local products differ from the Clifford one.
  const auto z2 = group_semigroup(cyclic_group(2));
  const auto c = constant_sss(chain_semilattice(2), {z2, z2}, {0, 0});
  CHECK(c.flatten().mul(2, 1) == 1);
  CHECK(c.flatten().mul(3, 1) == 1);
  CHECK(c.connect(1, 0, 1) == 0);
  CHECK_THROWS_WITH_AS(constant_sss(chain_semilattice(2), {z2, z2}, {0, 1}),
                       doctest::Contains("NotIdempotent"), ValidationError);
}

TEST_CASE("connector access and identity on equal components") {
  const auto s = clifford_pair();
  CHECK(s.connect(1, 0, 1) == 1);
  CHECK(s.connect(1, 1, 1) == 1); // identity when alpha == beta
  CHECK_THROWS_WITH_AS(s.connect(0, 1, 0), doctest::Contains("ParseError"),
                       ValidationError);
}

TEST_CASE("componentwise automorphisms validate and apply") {
  const auto s = clifford_pair();
  const auto aut =
      sss_build_automorphism(s, {0, 1}, {{0, 1}, {0, 1}});
  CHECK(sss_flat_map(s, aut) == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_WITH_AS(
      sss_build_automorphism(s, {1, 0}, {{0, 1}, {0, 1}}),
      doctest::Contains("PreconditionFails"), ValidationError);
  CHECK_THROWS_WITH_AS(
      sss_build_automorphism(s, {0, 1}, {{1, 0}, {0, 1}}),
      doctest::Contains("PreconditionFails"), ValidationError);

  // A diagram failure: null components, identity-like connector, swap the
  // two nonzero bottom elements but fix the top.
  const auto s2 = sss_construct(chain_semilattice(2),
                                {null_semigroup(3), null_semigroup(2)},
                                ConnectorMap{{{1, 0}, {0, 1}}});
  CHECK_THROWS_WITH_AS(
      sss_build_automorphism(s2, {0, 1}, {{0, 2, 1}, {0, 1}}),
      doctest::Contains("DiagramFails"), ValidationError);
  CHECK(sss_diagram_violation(s2, {0, 1}, {{0, 2, 1}, {0, 1}}).has_value());
  CHECK(!sss_diagram_violation(s2, {0, 1}, {{0, 1, 2}, {0, 1}}).has_value());
}

TEST_CASE("flat maps of built automorphisms are automorphisms") {
  const auto v4 = group_semigroup(klein_group());
  const auto z2 = group_semigroup(cyclic_group(2));
  const auto s = sss_construct(chain_semilattice(2), {v4, z2},
                               ConnectorMap{{{1, 0}, {0, 2}}});
  // theta_0 swaps the two V4 generators outside the image {0, 2}... the
  // image of psi must be fixed setwise by theta_0 for the diagram:
  // theta_0 = (1 3) fixes {0,2} pointwise, theta_1 = id.
  const auto aut = sss_build_automorphism(s, {0, 1}, {{0, 3, 2, 1}, {0, 1}});
  const auto map = sss_flat_map(s, aut);
  CHECK(is_semigroup_isomorphism(s.flatten(), s.flatten(), map));
}

TEST_CASE("purity of small Clifford semigroups and normal bands") {
  const auto clifford = is_automorphism_pure(clifford_pair());
  CHECK(clifford.pure);
  CHECK(clifford.checked == 1);
  CHECK(!clifford.witness.has_value());

  const auto lz = left_zero(2);
  const auto band = sss_construct(chain_semilattice(2), {lz, lz},
                                  ConnectorMap{{{1, 0}, {0, 1}}});
  const auto band_report = is_automorphism_pure(band);
  CHECK(band_report.pure);
  CHECK(band_report.checked == 2);
}

TEST_CASE("null components break purity through the diagrams") {
  const auto s = sss_construct(chain_semilattice(2),
                               {null_semigroup(3), null_semigroup(2)},
                               ConnectorMap{{{1, 0}, {0, 1}}});
  CHECK(s.flatten().order == 5);
  const auto report = is_automorphism_pure(s);
  CHECK(!report.pure);
  CHECK(report.checked == 2);
  REQUIRE(report.witness.has_value());
  CHECK(report.reason.find("diagram") != std::string::npos);
  // The witness swaps the two nonzero bottom elements.
  CHECK(*report.witness == std::vector<int>{0, 2, 1, 3, 4});
  // It is a genuine flat automorphism nevertheless.
  CHECK(is_semigroup_isomorphism(s.flatten(), s.flatten(), *report.witness));
}

TEST_CASE("lift_from_zero reconstructs the top map") {
  const auto v4 = group_semigroup(klein_group());
  const auto z2 = group_semigroup(cyclic_group(2));
  // psi embeds Z2 as {0, 2} in V4.
  const auto s = sss_construct(chain_semilattice(2), {v4, z2},
                               ConnectorMap{{{1, 0}, {0, 2}}});

  const auto aut = lift_from_zero(s, {0, 3, 2, 1}, {0, 1});
  CHECK(aut.maps[0] == std::vector<int>{0, 3, 2, 1});
  CHECK(aut.maps[1] == std::vector<int>{0, 1});
  CHECK(is_semigroup_isomorphism(s.flatten(), s.flatten(),
                                 sss_flat_map(s, aut)));

  // theta_0 = (1 2) moves the image set {0, 2}.
  CHECK_THROWS_WITH_AS(lift_from_zero(s, {0, 2, 1, 3}, {0, 1}),
                       doctest::Contains("PreconditionFails"),
                       ValidationError);
  // Non-injective connectors are rejected up front.
  const auto proj = sss_construct(chain_semilattice(2), {v4, z2},
                                  ConnectorMap{{{1, 0}, {0, 0}}});
  CHECK_THROWS_WITH_AS(lift_from_zero(proj, {0, 1, 2, 3}, {0, 1}),
                       doctest::Contains("PreconditionFails"),
                       ValidationError);
}

TEST_CASE("lift_from_zero rejects pi crossing image-set classes") {
  // Diamond with S1 = Z2 as {0,2} in V4, S2 = Z2 as {0,1} in V4, S3
  // trivial: both middle components embed injectively but with different
  // images, so the diamond automorphism swapping them does not lift.
  const auto v4 = group_semigroup(klein_group());
  const auto z2 = group_semigroup(cyclic_group(2));
  const auto s = sss_construct(diamond(), {v4, z2, z2, trivial()},
                               ConnectorMap{{{1, 0}, {0, 2}},
                                            {{2, 0}, {0, 1}},
                                            {{3, 0}, {0}},
                                            {{3, 1}, {0}},
                                            {{3, 2}, {0}}});
  CHECK(all_connectors_injective(s));
  CHECK_THROWS_WITH_AS(lift_from_zero(s, {0, 1, 2, 3}, {0, 2, 1, 3}),
                       doctest::Contains("PreconditionFails"),
                       ValidationError);
  // The identity pi lifts fine.
  const auto aut = lift_from_zero(s, {0, 1, 2, 3}, {0, 1, 2, 3});
  CHECK(is_semigroup_isomorphism(s.flatten(), s.flatten(),
                                 sss_flat_map(s, aut)));
}

TEST_CASE("iso_to_product on bijective connectors") {
  const auto s = clifford_pair();
  CHECK(all_connectors_bijective(s));
  const auto form = iso_to_product(s);
  CHECK(form.base == 0);
  const auto expected = direct_product(
      group_semigroup(cyclic_group(2)),
      semilattice_as_semigroup(chain_semilattice(2)));
  CHECK(form.product.table == expected.table);
  CHECK(is_semigroup_isomorphism(s.flatten(), form.product, form.forward));
  for (int x = 0; x < 4; ++x)
    CHECK(form.backward[form.forward[x]] == x);

  const auto v4 = group_semigroup(klein_group());
  const auto z2 = group_semigroup(cyclic_group(2));
  const auto bad = sss_construct(chain_semilattice(2), {v4, z2},
                                 ConnectorMap{{{1, 0}, {0, 2}}});
  CHECK(!all_connectors_bijective(bad));
  CHECK_THROWS_WITH_AS(iso_to_product(bad),
                       doctest::Contains("ConnectorNotBijective"),
                       ValidationError);
}

TEST_CASE("eta, upsilon and xi relations") {
  const auto v4 = group_semigroup(klein_group());
  const auto z2 = group_semigroup(cyclic_group(2));
  const auto s = sss_construct(diamond(), {v4, z2, z2, trivial()},
                               ConnectorMap{{{1, 0}, {0, 2}},
                                            {{2, 0}, {0, 1}},
                                            {{3, 0}, {0}},
                                            {{3, 1}, {0}},
                                            {{3, 2}, {0}}});
  const auto eta = sss_eta_classes(s);
  CHECK(eta.classes == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});

  // Distinct images in the bottom: xi is finer here.
  const auto xi = sss_xi_classes(s);
  CHECK(xi.classes ==
        std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});

  // upsilon with the identity element of each group chosen: for groups any
  // isomorphism fixes the identity, so upsilon == eta.
  const auto ups = sss_upsilon_classes(s, {0, 0, 0, 0});
  CHECK(ups.classes == eta.classes);

  // upsilon refines eta in general: left-zero components with different
  // chosen idempotents stay eta-related but upsilon splits on nothing
  // here since any element works; use a monoid vs plain element instead.
  for (std::size_t c = 0; c < ups.classes.size(); ++c)
    for (int alpha : ups.classes[c])
      CHECK(eta.class_of[alpha] == eta.class_of[ups.classes[c][0]]);

  // xi refines eta whenever connectors are injective.
  for (std::size_t c = 0; c < xi.classes.size(); ++c)
    for (int alpha : xi.classes[c])
      CHECK(eta.class_of[alpha] == eta.class_of[xi.classes[c][0]]);
}

TEST_CASE("upsilon depends on the chosen idempotents") {
  // Two right-zero components on a 2-antichain-with-zero... simplest:
  // 3-chain with right-zero semigroups of size 2 upstairs. Any bijection
  // is an isomorphism, so any choice pairing works: upsilon == eta.
  const auto rz = [] {
    std::vector<std::vector<int>> t{{0, 1}, {0, 1}};
    return semigroup_from_table(t);
  }();
  const auto s = constant_sss(chain_semilattice(3),
                              {trivial(), rz, rz}, {0, 0, 0});
  const auto eta = sss_eta_classes(s);
  CHECK(eta.classes == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(sss_upsilon_classes(s, {0, 0, 1}).classes == eta.classes);
  CHECK(sss_upsilon_classes(s, {0, 1, 1}).classes == eta.classes);
}

TEST_CASE("E-unitary detection through the flattened semigroup") {
  // Injective connectors keep the Clifford semigroup E-unitary: e s in E
  // with e idempotent forces s idempotent.
  const auto s = clifford_pair();
  const auto &f = s.flatten();
  const auto es = idempotents(f);
  const std::set<int> eset(es.begin(), es.end());
  bool unitary = true;
  for (int e : es)
    for (int x = 0; x < f.order; ++x)
      if (eset.count(f.mul(e, x)) && !eset.count(x))
        unitary = false;
  CHECK(unitary);

  // The projection V4 -> Z2 is not injective and kills unitarity.
  const auto v4 = group_semigroup(klein_group());
  const auto z2 = group_semigroup(cyclic_group(2));
  const auto proj = sss_construct(chain_semilattice(2), {z2, v4},
                                  ConnectorMap{{{1, 0}, {0, 1, 0, 1}}});
  const auto &g = proj.flatten();
  const auto gs = idempotents(g);
  const std::set<int> gset(gs.begin(), gs.end());
  bool all = true;
  for (int e : gs)
    for (int x = 0; x < g.order; ++x)
      if (gset.count(g.mul(e, x)) && !gset.count(x))
        all = false;
  CHECK(!all);
}
