#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/group.hpp"
#include "semicat/rees.hpp"
#include "semicat/rees_iso.hpp"
#include "semicat/semigroup.hpp"


using namespace semicat;

namespace {

constexpr int Z = SandwichMatrix::kZero;

SandwichMatrix identity_matrix(int n) {
  std::vector<std::vector<int>> e(n, std::vector<int>(n, Z));
  for (int i = 0; i < n; ++i)
    e[i][i] = 0;
  return sandwich_matrix(n, n, e);
}

ReesMatrixSemigroup brandt(const FiniteGroup &g, int n) {
  return rees_construct(g, identity_matrix(n));
}

std::vector<std::vector<int>> maps_of(const ReesMatrixSemigroup &s,
                                      const ReesMatrixSemigroup &t,
                                      const std::vector<ReesIso> &isos) {
  std::vector<std::vector<int>> out;
  for (const auto &iso : isos)
    out.push_back(iso_as_map(s, t, iso));
  return out;
}

// The two-component composite over Z5 used throughout: a 2x2 block with
// entries 1,1,1,g on each diagonal block (g = 1 resp. 2).
ReesMatrixSemigroup two_block_composite() {
  return compose_components(
      cyclic_group(5),
      {ReesComponent{{0, 1}, {0, 1}, sandwich_matrix(2, 2, {{0, 0}, {0, 1}})},
       ReesComponent{{2, 3},
                     {2, 3},
                     sandwich_matrix(2, 2, {{0, 0}, {0, 2}})}});
}

} // namespace

TEST_CASE("validate_iso on a hand-written scaling example") {
  // P = (1 a) row over Z5 rescales to the all-identity row Q = (1 1) by
  // u = (1, a^-1)... here in the sandwich convention v_l q u_i, with
  // q = 1 the valid tuple is u = (1, a), v = (1), a = 1.
  const auto g = cyclic_group(5);
  const auto s = rees_construct(g, sandwich_matrix(1, 2, {{0, 1}}));
  const auto t = rees_construct(g, sandwich_matrix(1, 2, {{0, 0}}));

  ReesIso iso{identity_group_map(g), identity_bigraph_iso(induced_graph(s)),
              {0, 1}, {0}};
  const auto check = validate_iso(s, t, iso);
  CHECK(check.ok);
  CHECK(!check.violation.has_value());
  CHECK(is_semigroup_isomorphism(rees_to_semigroup(s), rees_to_semigroup(t),
                                 iso_as_map(s, t, iso)));

  iso.u[1] = 0; // break the scaled entry
  const auto bad = validate_iso(s, t, iso);
  CHECK(!bad.ok);
  REQUIRE(bad.violation.has_value());
  CHECK(*bad.violation == std::make_pair(0, 1));
}

TEST_CASE("validate_iso accepts the diagonal-to-identity quadruple") {
  // T has diag(g_0, g_1) sandwich matrix; u_i = g_i^-1, v = 1 maps the
  // identity-matrix Brandt semigroup onto T.
  const auto g = cyclic_group(5);
  const auto b = brandt(g, 2);
  const auto t = rees_construct(g, sandwich_matrix(2, 2, {{2, Z}, {Z, 3}}));
  ReesIso iso{identity_group_map(g), identity_bigraph_iso(induced_graph(b)),
              {g.inv(2), g.inv(3)}, {0, 0}};
  CHECK(validate_iso(b, t, iso).ok);
  CHECK(is_semigroup_isomorphism(rees_to_semigroup(b), rees_to_semigroup(t),
                                 iso_as_map(b, t, iso)));
}

TEST_CASE("validate_iso shape checks") {
  const auto g = cyclic_group(2);
  const auto s = brandt(g, 2);
  ReesIso iso = identity_iso(s);
  iso.u.pop_back();
  CHECK_THROWS_WITH_AS(validate_iso(s, s, iso),
                       doctest::Contains("ShapeMismatch"), ValidationError);
}

TEST_CASE("apply, compose and invert round-trip") {
  const auto s = two_block_composite();
  const auto autos = enumerate_isos(s, s);
  REQUIRE(!autos.empty());
  const auto id_map = iso_as_map(s, s, identity_iso(s));
  for (std::size_t k = 0; k < std::min<std::size_t>(autos.size(), 10); ++k) {
    const auto &iso = autos[k];
    const auto inv = invert_iso(s, s, iso);
    CHECK(validate_iso(s, s, inv).ok);
    const auto round = compose_iso(s, s, s, iso, inv);
    CHECK(iso_as_map(s, s, round) == id_map);
    // apply_iso agrees with the full map, zero goes to zero.
    const auto map = iso_as_map(s, s, iso);
    CHECK(apply_iso(s, s, iso, 0) == 0);
    for (int x = 0; x < s.order(); ++x)
      CHECK(apply_iso(s, s, iso, x) == map[x]);
  }
}

TEST_CASE("enumerate_isos matches brute force on frozen instances") {
  struct Frozen {
    ReesMatrixSemigroup s;
    std::size_t count;
  };
  const std::vector<Frozen> table{
      {brandt(cyclic_group(2), 1), 1},
      {brandt(cyclic_group(2), 2), 4},
      {brandt(symmetric_group_s3(), 1), 6},
      {brandt(cyclic_group(4), 1), 2},
      {rees_construct(cyclic_group(1), sandwich_matrix(2, 2, {{0, 0}, {0, 0}})),
       4},
      {rees_construct(cyclic_group(2), sandwich_matrix(2, 2, {{0, 0}, {0, 0}})),
       4},
  };
  for (const auto &f : table) {
    const auto structured = enumerate_isos(f.s, f.s);
    CHECK(structured.size() == f.count);
    for (const auto &iso : structured)
      CHECK(validate_iso(f.s, f.s, iso).ok);
    auto maps = maps_of(f.s, f.s, structured);
    const auto sg = rees_to_semigroup(f.s);
    BruteForceOptions opts;
    opts.max_order = 64;
    auto brute = brute_force_isomorphisms(sg, sg, opts);
    std::sort(maps.begin(), maps.end());
    std::sort(brute.begin(), brute.end());
    CHECK(maps == brute);
  }
}

TEST_CASE("enumerate_isos separates non-isomorphic pairs") {
  const auto z4 = brandt(cyclic_group(4), 1);
  const auto v4 = brandt(klein_group(), 1);
  CHECK(enumerate_isos(z4, v4).empty());
  CHECK(enumerate_isos(v4, z4).empty());

  // Same group, graphs of different shapes.
  const auto one = brandt(cyclic_group(2), 1);
  const auto two = brandt(cyclic_group(2), 2);
  CHECK(enumerate_isos(one, two).empty());
}

TEST_CASE("enumeration options bound work") {
  const auto s = two_block_composite();
  ReesEnumOptions opts;
  opts.limit = 3;
  CHECK(enumerate_isos(s, s, opts).size() == 3);
  opts.limit.reset();
  opts.max_order = 10;
  CHECK_THROWS_WITH_AS(enumerate_isos(s, s, opts),
                       doctest::Contains("SizeLimitExceeded"),
                       ValidationError);
}

TEST_CASE("trivializable maps of the cyclic Brandt point") {
  // Aut(B0[Z4;1]) has two elements: identity and inversion. Only the
  // identity admits a trivial-theta form, since conjugation in an abelian
  // group never inverts.
  const auto s = brandt(cyclic_group(4), 1);
  const auto autos = enumerate_isos(s, s);
  REQUIRE(autos.size() == 2);
  int trivializable = 0;
  for (const auto &iso : autos) {
    const auto t = try_trivialize(s, s, iso);
    if (!t)
      continue;
    ++trivializable;
    CHECK(validate_iso(s, s, *t).ok);
    CHECK(iso_as_map(s, s, *t) == iso_as_map(s, s, iso));
    CHECK(t->theta.images == identity_group_map(s.group).images);
  }
  CHECK(trivializable == 1);
  CHECK(trivial_theta_isos(s, s).size() == 1);
}

TEST_CASE("trivializable maps form a subgroup of the composite") {
  const auto s = two_block_composite();
  const auto autos = enumerate_isos(s, s);
  CHECK(autos.size() == 80);

  std::size_t swapping = 0;
  for (const auto &iso : autos)
    if (iso.psi.left_map[0] >= 2)
      ++swapping;
  CHECK(swapping == 40);

  std::set<std::vector<int>> trivializable;
  for (const auto &iso : autos) {
    const auto t = try_trivialize(s, s, iso);
    if (t) {
      CHECK(iso_as_map(s, s, *t) == iso_as_map(s, s, iso));
      trivializable.insert(iso_as_map(s, s, iso));
    }
  }
  CHECK(trivializable.size() == 20);
  CHECK(trivial_theta_isos(s, s).size() == 20);

  // Closure under composition and inverse of the underlying maps.
  const auto sg = rees_to_semigroup(s);
  for (const auto &f : trivializable)
    for (const auto &g : trivializable) {
      std::vector<int> fg(f.size());
      for (std::size_t x = 0; x < f.size(); ++x)
        fg[x] = g[f[x]];
      CHECK(trivializable.count(fg) == 1);
    }
}

TEST_CASE("graham normalization of a scaled row") {
  const auto g = cyclic_group(5);
  const auto s = rees_construct(g, sandwich_matrix(1, 2, {{0, 1}}));
  const auto n = graham_normalize(s);
  CHECK(n.normalized.matrix.entries ==
        std::vector<std::vector<int>>{{0, 0}});
  CHECK(validate_iso(s, n.normalized, n.iso).ok);
  CHECK(n.iso.theta.images == identity_group_map(g).images);
  CHECK(is_semigroup_isomorphism(rees_to_semigroup(s),
                                 rees_to_semigroup(n.normalized),
                                 iso_as_map(s, n.normalized, n.iso)));
  CHECK(n.forest.size() == 2); // spanning tree of K(2,1)
}

TEST_CASE("graham normalization clears spanning-forest entries") {
  const auto cases = std::vector<ReesMatrixSemigroup>{
      rees_construct(cyclic_group(5),
                     sandwich_matrix(2, 3, {{1, 2, Z}, {Z, 3, 4}})),
      rees_construct(cyclic_group(4), sandwich_matrix(2, 2, {{1, 2}, {3, 0}})),
      rees_construct(klein_group(), sandwich_matrix(2, 2, {{1, Z}, {Z, 2}})),
      two_block_composite(),
  };
  for (const auto &s : cases) {
    const auto n = graham_normalize(s);
    CHECK(validate_iso(s, n.normalized, n.iso).ok);
    // Forest entries become the identity; shape and zeros are untouched.
    for (const auto &[lambda, i] : n.forest)
      CHECK(n.normalized.matrix.at(lambda, i) == 0);
    const int rows = s.matrix.rows, cols = s.matrix.cols;
    int verts = 0;
    for (const auto &comp : components(induced_graph(s)))
      verts += int(comp.left.size() + comp.right.size());
    CHECK(int(n.forest.size()) ==
          verts - int(components(induced_graph(s)).size()));
    for (int l = 0; l < rows; ++l)
      for (int i = 0; i < cols; ++i)
        CHECK(s.matrix.is_zero(l, i) == n.normalized.matrix.is_zero(l, i));
  }
}

TEST_CASE("trees normalize to all-identity matrices") {
  // The induced graph of the path example is a tree, so normalization
  // leaves no nontrivial entry at all.
  const auto s = rees_construct(cyclic_group(5),
                                sandwich_matrix(2, 3, {{1, 2, Z}, {Z, 3, 4}}));
  const auto n = graham_normalize(s);
  for (int l = 0; l < 2; ++l)
    for (int i = 0; i < 3; ++i)
      if (!n.normalized.matrix.is_zero(l, i))
        CHECK(n.normalized.matrix.at(l, i) == 0);
}

TEST_CASE("diagonal matrices normalize to the identity matrix") {
  const auto g = cyclic_group(5);
  const auto t = rees_construct(g, sandwich_matrix(2, 2, {{2, Z}, {Z, 3}}));
  const auto n = graham_normalize(t);
  CHECK(n.normalized.matrix.entries ==
        std::vector<std::vector<int>>{{0, Z}, {Z, 0}});
}

TEST_CASE("decompose_by_components splits automorphisms") {
  const auto s = two_block_composite();
  const auto d = decompose_components(s);
  REQUIRE(d.components.size() == 2);
  const auto autos = enumerate_isos(s, s);

  int swaps = 0;
  for (const auto &iso : autos) {
    const auto split = decompose_by_components(s, d, iso);
    REQUIRE(split.parts.size() == 2);
    const bool swap = split.pi == std::vector<int>{1, 0};
    if (!swap)
      CHECK(split.pi == std::vector<int>{0, 1});
    swaps += swap;
    for (std::size_t k = 0; k < 2; ++k) {
      const auto a = component_semigroup(s, d.components[k]);
      const auto b = component_semigroup(s, d.components[split.pi[k]]);
      CHECK(validate_iso(a, b, split.parts[k]).ok);
    }
  }
  CHECK(swaps == 40);
}

TEST_CASE("component iso counts and the eta relation") {
  const auto s = two_block_composite();
  const auto d = decompose_components(s);
  const auto a = component_semigroup(s, d.components[0]);
  const auto b = component_semigroup(s, d.components[1]);

  CHECK(enumerate_isos(a, b).size() == 4);
  CHECK(trivial_theta_isos(a, b).empty());
  CHECK(trivial_theta_isos(a, a).size() == 2);

  // The components are isomorphic but not trivially so: eta has 2 classes.
  CHECK(rees_eta_classes(s, d) ==
        std::vector<std::vector<int>>{{0}, {1}});

  // Identity-matrix blocks over one group all fall in one class.
  const auto btwo = brandt(cyclic_group(2), 2);
  const auto bd = decompose_components(btwo);
  CHECK(rees_eta_classes(btwo, bd) ==
        std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("structured enumeration equals brute force across a small zoo") {
  const std::vector<ReesMatrixSemigroup> zoo{
      rees_construct(cyclic_group(3), sandwich_matrix(2, 2, {{0, 0}, {0, 1}})),
      rees_construct(klein_group(), sandwich_matrix(1, 2, {{0, 1}})),
      rees_construct(cyclic_group(2),
                     sandwich_matrix(3, 2, {{0, Z}, {Z, 0}, {0, 1}})),
      rees_construct(cyclic_group(4), sandwich_matrix(2, 1, {{0}, {2}})),
  };
  BruteForceOptions opts;
  opts.max_order = 64;
  for (const auto &s : zoo)
    for (const auto &t : zoo) {
      auto maps = maps_of(s, t, enumerate_isos(s, t));
      auto brute =
          brute_force_isomorphisms(rees_to_semigroup(s), rees_to_semigroup(t),
                                   opts);
      std::sort(maps.begin(), maps.end());
      std::sort(brute.begin(), brute.end());
      CHECK(maps == brute);
    }
}
