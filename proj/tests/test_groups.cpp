#include <doctest.h>

#include <algorithm>

#include "semicat/error.hpp"
#include "semicat/group.hpp"
#include "support/oracles.hpp"

using namespace semicat;

namespace {

bool has_code(const ValidationError &e, const std::string &code) {
  return e.code() == code;
}

} // namespace

TEST_CASE("group_from_table accepts cyclic tables and fixes the identity at 0") {
  const auto z3 = cyclic_group(3);
  CHECK(z3.order == 3);
  CHECK(z3.mul(1, 2) == 0);
  CHECK(z3.inv(1) == 2);
  CHECK(z3.inv(0) == 0);

  // Z2 written with its identity at index 1; construction must relabel.
  const std::vector<std::vector<int>> z2_shifted = {{1, 0}, {0, 1}};
  const auto g = group_from_table(z2_shifted);
  CHECK(g.order == 2);
  CHECK(g.mul(0, 0) == 0);
  CHECK(g.mul(1, 1) == 0);
  CHECK(g.mul(0, 1) == 1);
}

TEST_CASE("group_from_table rejects bad tables with witnesses") {
  // x * y = x is associative but has no identity.
  CHECK_THROWS_WITH_AS(group_from_table({{0, 0}, {1, 1}}),
                       doctest::Contains("NoIdentity"), ValidationError);

  // Table with identity 0 but a non-associative product.
  try {
    group_from_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
    CHECK(false);
  } catch (const ValidationError &e) {
    const bool expected = has_code(e, "NotAssociative") || has_code(e, "NoInverse");
    CHECK(expected);
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }

  // Monoid that is not a group: {0,1} under multiplication, identity 0 after
  // relabelling, but 1 (absorbing) has no inverse.
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1}, {1, 1}}),
                       doctest::Contains("NoInverse"), ValidationError);
}

TEST_CASE("automorphism counts match the full bijection oracle") {
  struct Case {
    FiniteGroup g;
    size_t count;
  };
  const Case cases[] = {
      {cyclic_group(1), 1}, {cyclic_group(2), 1}, {cyclic_group(3), 2},
      {cyclic_group(4), 2}, {klein_group(), 6},   {cyclic_group(5), 4},
      {cyclic_group(6), 2}, {symmetric_group_s3(), 6},
  };
  for (const auto &c : cases) {
    const auto autos = group_automorphisms(c.g);
    CHECK(autos.size() == c.count);
    const auto oracle = testing::all_bijection_group_isos(c.g, c.g);
    REQUIRE(autos.size() == oracle.size());
    for (size_t k = 0; k < autos.size(); ++k)
      CHECK(autos[k].images == oracle[k].images);
  }
}

TEST_CASE("automorphism lists start with the identity and are closed") {
  for (const auto &g : {klein_group(), cyclic_group(5), symmetric_group_s3()}) {
    const auto autos = group_automorphisms(g);
    REQUIRE(!autos.empty());
    CHECK(autos.front().images == identity_group_map(g).images);
    auto member = [&](const GroupMap &m) {
      return std::any_of(autos.begin(), autos.end(), [&](const GroupMap &a) {
        return a.images == m.images;
      });
    };
    for (const auto &a : autos) {
      CHECK(member(invert_group_map(a)));
      for (const auto &b : autos)
        CHECK(member(compose_group_maps(a, b)));
    }
  }
}

TEST_CASE("group_isomorphisms distinguishes Z4 from the Klein group") {
  CHECK(group_isomorphisms(cyclic_group(4), klein_group()).empty());
  const auto isos = group_isomorphisms(klein_group(), klein_group());
  CHECK(isos.size() == 6);
  // Cross-table case: two presentations of Z2 x Z2 must be isomorphic.
  const auto k = klein_group();
  const auto oracle = testing::all_bijection_group_isos(k, k);
  CHECK(oracle.size() == 6);
}

TEST_CASE("group map composition and inversion") {
  const auto g = cyclic_group(5);
  const auto autos = group_automorphisms(g);
  REQUIRE(autos.size() == 4);
  for (const auto &a : autos) {
    const auto inv = invert_group_map(a);
    CHECK(compose_group_maps(a, inv).images == identity_group_map(g).images);
    CHECK(compose_group_maps(inv, a).images == identity_group_map(g).images);
  }
}

TEST_CASE("element orders") {
  const auto s3 = symmetric_group_s3();
  std::vector<int> orders;
  for (int x = 0; x < s3.order; ++x)
    orders.push_back(element_order(s3, x));
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 3});
}
