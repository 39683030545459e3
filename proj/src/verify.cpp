#include "semicat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "semicat/bigraph.hpp"
#include "semicat/error.hpp"
#include "semicat/group.hpp"
#include "semicat/orbits.hpp"
#include "semicat/rees_iso.hpp"
#include "semicat/semigroup.hpp"
#include "semicat/semilattice.hpp"

namespace semicat {

namespace {

using Clock = std::chrono::steady_clock;

// Pinned wall-clock budgets in milliseconds; 0 means unbounded.
constexpr double kIsoBudgetMs = 120000.0;
constexpr double kCalculusBudgetMs = 30000.0;
constexpr double kHallBudgetMs = 60000.0;
constexpr double kOrbitBudgetMs = 60000.0;

constexpr int kZ = SandwichMatrix::kZero;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

CriterionResult finish(const std::string &name, bool passed,
                       const std::string &detail, Clock::time_point start,
                       double budget_ms) {
  CriterionResult r;
  r.name = name;
  r.elapsed_ms = elapsed_ms(start);
  r.passed = passed && (budget_ms <= 0.0 || r.elapsed_ms < budget_ms);
  r.detail = detail;
  if (passed && !r.passed)
    r.detail += " [over time budget]";
  return r;
}

std::vector<FiniteGroup> corpus_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          klein_group()};
}

FiniteSemigroup group_sg(const FiniteGroup &g) {
  return semigroup_from_table(g.table);
}

FiniteSemigroup left_zero_sg(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = x;
  return semigroup_from_table(t);
}

FiniteSemigroup right_zero_sg(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = y;
  return semigroup_from_table(t);
}

// Tree-shaped staircase matrix: row l meets columns l and l+1, the last row
// sweeps to the right edge; entries cycle through the group.
SandwichMatrix staircase(const FiniteGroup &g, int rows, int cols) {
  std::vector<std::vector<int>> entries(rows, std::vector<int>(cols, kZ));
  for (int l = 0; l < rows; ++l)
    for (int i = 0; i < cols; ++i) {
      const bool on = i == std::min(l, cols - 1) || i == l + 1 ||
                      (l == rows - 1 && i >= l);
      if (on)
        entries[l][i] = (l + i) % g.order;
    }
  return sandwich_matrix(rows, cols, entries);
}

std::string bucket_key(const ReesMatrixSemigroup &s) {
  std::string key = std::to_string(s.matrix.rows) + "x" +
                    std::to_string(s.matrix.cols) + "/";
  for (const auto &row : s.group.table)
    for (int v : row)
      key += std::to_string(v) + ",";
  return key;
}

std::vector<std::vector<int>> structured_maps(const ReesMatrixSemigroup &s,
                                              const ReesMatrixSemigroup &t) {
  ReesEnumOptions opts;
  opts.max_order = 1024;
  std::vector<std::vector<int>> maps;
  for (const auto &iso : enumerate_isos(s, t, opts))
    maps.push_back(iso_as_map(s, t, iso));
  std::sort(maps.begin(), maps.end());
  return maps;
}

std::vector<std::vector<int>> brute_maps(const FiniteSemigroup &s,
                                         const FiniteSemigroup &t) {
  BruteForceOptions opts;
  opts.max_order = 1024;
  auto maps = brute_force_isomorphisms(s, t, opts);
  std::sort(maps.begin(), maps.end());
  return maps;
}

// ---------------------------------------------------------------------------
// Criterion: isomorphism-theorem completeness.

CriterionResult criterion_iso_theorem() {
  const auto start = Clock::now();
  const auto corpus = verification_corpus();

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t k = 0; k < corpus.size(); ++k)
    buckets[bucket_key(corpus[k])].push_back(k);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < corpus.size(); ++k)
    pairs.push_back({k, k});
  for (const auto &[key, members] : buckets)
    for (std::size_t k = 0; k + 1 < members.size(); ++k)
      pairs.push_back({members[k], members[k + 1]});
  for (std::size_t k = 0; k < corpus.size(); k += 9)
    pairs.push_back({k, (k * 7 + 3) % corpus.size()});

  std::size_t mismatches = 0;
  std::size_t nonempty = 0;
  for (const auto &[a, b] : pairs) {
    const auto structured = structured_maps(corpus[a], corpus[b]);
    const auto brute = brute_maps(rees_to_semigroup(corpus[a]),
                                  rees_to_semigroup(corpus[b]));
    if (structured != brute)
      ++mismatches;
    if (!structured.empty())
      ++nonempty;
  }

  std::ostringstream detail;
  detail << "instances=" << corpus.size() << " pairs=" << pairs.size()
         << " nonempty=" << nonempty << " mismatches=" << mismatches;
  const bool ok = mismatches == 0 && corpus.size() >= 200;
  return finish("iso-theorem", ok, detail.str(), start, kIsoBudgetMs);
}

// ---------------------------------------------------------------------------
// Criterion: calculus coherence (composition and inversion).

std::vector<int> compose_maps(const std::vector<int> &first,
                              const std::vector<int> &second) {
  std::vector<int> out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x)
    out[x] = second[first[x]];
  return out;
}

CriterionResult criterion_calculus() {
  const auto start = Clock::now();
  std::vector<ReesMatrixSemigroup> small;
  for (const auto &s : verification_corpus())
    if (s.order() <= 27)
      small.push_back(s);

  std::size_t checked = 0;
  std::size_t mismatches = 0;
  ReesEnumOptions opts;
  opts.max_order = 27;

  for (const auto &s : small) {
    const auto autos = enumerate_isos(s, s, opts);
    std::vector<std::vector<int>> maps;
    for (const auto &iso : autos)
      maps.push_back(iso_as_map(s, s, iso));
    const auto id_map = iso_as_map(s, s, identity_iso(s));

    for (std::size_t i = 0; i < autos.size(); ++i) {
      const auto inv = invert_iso(s, s, autos[i]);
      std::vector<int> pointwise(maps[i].size());
      for (std::size_t x = 0; x < maps[i].size(); ++x)
        pointwise[maps[i][x]] = static_cast<int>(x);
      ++checked;
      if (iso_as_map(s, s, inv) != pointwise ||
          iso_as_map(s, s, compose_iso(s, s, s, autos[i], inv)) != id_map)
        ++mismatches;
      for (std::size_t j = 0; j < autos.size(); ++j) {
        const auto composed = compose_iso(s, s, s, autos[i], autos[j]);
        ++checked;
        if (iso_as_map(s, s, composed) != compose_maps(maps[i], maps[j]))
          ++mismatches;
      }
    }

    // Associativity triples over a bounded prefix.
    const std::size_t cap = std::min<std::size_t>(autos.size(), 4);
    for (std::size_t i = 0; i < cap; ++i)
      for (std::size_t j = 0; j < cap; ++j)
        for (std::size_t k = 0; k < cap; ++k) {
          const auto left = compose_iso(
              s, s, s, compose_iso(s, s, s, autos[i], autos[j]), autos[k]);
          const auto right = compose_iso(
              s, s, s, autos[i], compose_iso(s, s, s, autos[j], autos[k]));
          ++checked;
          if (iso_as_map(s, s, left) != iso_as_map(s, s, right) ||
              iso_as_map(s, s, left) !=
                  compose_maps(compose_maps(maps[i], maps[j]), maps[k]))
            ++mismatches;
        }
  }

  // Cross-instance chains S -> T -> S on an isomorphic pair.
  std::size_t cross = 0;
  for (std::size_t a = 0; a < small.size() && cross < 6; ++a)
    for (std::size_t b = a + 1; b < small.size() && cross < 6; ++b) {
      if (small[a].order() != small[b].order())
        continue;
      const auto fwd = enumerate_isos(small[a], small[b], opts);
      if (fwd.empty())
        continue;
      ++cross;
      const auto back = invert_iso(small[a], small[b], fwd.front())
;
      const auto round =
          compose_iso(small[a], small[b], small[a], fwd.front(), back);
      ++checked;
      if (iso_as_map(small[a], small[a], round) !=
          iso_as_map(small[a], small[a], identity_iso(small[a])))
        ++mismatches;
    }

  std::ostringstream detail;
  detail << "instances=" << small.size() << " checks=" << checked
         << " cross=" << cross << " mismatches=" << mismatches;
  return finish("calculus", mismatches == 0 && !small.empty(), detail.str(),
                start, kCalculusBudgetMs);
}

// ---------------------------------------------------------------------------
// Criterion: idempotent formula equals the brute scan.

CriterionResult criterion_idempotents() {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  std::size_t instances = 0;
  for (const auto &s : verification_corpus()) {
    ++instances;
    const auto sg = rees_to_semigroup(s);
    std::vector<int> scan;
    for (int x = 0; x < sg.order; ++x)
      if (sg.mul(x, x) == x)
        scan.push_back(x);
    if (rees_idempotents(s) != scan)
      ++mismatches;
  }
  std::ostringstream detail;
  detail << "instances=" << instances << " mismatches=" << mismatches;
  return finish("idempotents", mismatches == 0 && instances > 0, detail.str(),
                start, 0.0);
}

// ---------------------------------------------------------------------------
// Criterion: Hall orthodoxy equivalence, exhaustive over Z1 and Z2.

CriterionResult criterion_hall() {
  const auto start = Clock::now();
  std::size_t regular = 0;
  std::size_t mismatches = 0;
  for (int group_order = 1; group_order <= 2; ++group_order) {
    const auto g = cyclic_group(group_order);
    for (int rows = 1; rows <= 3; ++rows)
      for (int cols = 1; cols <= 3; ++cols) {
        const int cells = rows * cols;
        long long total = 1;
        for (int c = 0; c < cells; ++c)
          total *= group_order + 1;
        for (long long mask = 0; mask < total; ++mask) {
          long long rest = mask;
          std::vector<std::vector<int>> entries(rows, std::vector<int>(cols));
          for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
              entries[r][c] = static_cast<int>(rest % (group_order + 1)) - 1;
              rest /= group_order + 1;
            }
          ReesMatrixSemigroup s;
          try {
            s = rees_construct(g, sandwich_matrix(rows, cols, entries));
          } catch (const ValidationError &) {
            continue;
          }
          ++regular;
          const auto pred = structural_predicates(s);
          const auto graph = induced_graph(s);
          bool complete = true;
          for (const auto &comp : components(graph))
            for (int i : comp.left)
              for (int l : comp.right)
                complete = complete && graph.adj[i][l];
          if (pred.is_orthodox != (pred.is_pure_matrix && complete))
            ++mismatches;
        }
      }
  }
  std::ostringstream detail;
  detail << "regular=" << regular << " mismatches=" << mismatches;
  return finish("hall", mismatches == 0 && regular > 0, detail.str(), start,
                kHallBudgetMs);
}

// ---------------------------------------------------------------------------
// Criterion: Graham normalization soundness on the corpus.

CriterionResult criterion_graham() {
  const auto start = Clock::now();
  std::size_t instances = 0;
  std::size_t failures = 0;
  for (const auto &s : verification_corpus()) {
    ++instances;
    const auto n = graham_normalize(s);
    bool ok = validate_iso(s, n.normalized, n.iso).ok;
    for (const auto &[lambda, i] : n.forest)
      ok = ok && n.normalized.matrix.at(lambda, i) == 0;
    for (int l = 0; l < s.matrix.rows && ok; ++l)
      for (int i = 0; i < s.matrix.cols; ++i)
        ok = ok && s.matrix.is_zero(l, i) == n.normalized.matrix.is_zero(l, i);
    if (!ok)
      ++failures;
  }
  std::ostringstream detail;
  detail << "instances=" << instances << " failures=" << failures;
  return finish("graham", failures == 0 && instances > 0, detail.str(), start,
                0.0);
}

// ---------------------------------------------------------------------------
// Criterion: orbit counting (Burnside vs union-find; Bell checkpoints).

CriterionResult criterion_orbits() {
  const auto start = Clock::now();
  std::size_t carriers = 0;
  std::size_t mismatches = 0;

  for (const auto &s : verification_corpus()) {
    if (s.order() > 15)
      continue;
    ++carriers;
    std::vector<std::vector<int>> perms;
    for (const auto &iso : enumerate_isos(s, s))
      perms.push_back(iso_as_map(s, s, iso));
    const auto g = closure(s.order(), perms);
    const auto profile = oligomorphy_profile(g, 3);
    for (int n = 1; n <= 3; ++n)
      if (orbit_count_union_find(g, n) != profile.orbits_on(n))
        ++mismatches;
  }

  // Trivial groups count all tuples.
  for (int degree : {4, 9, 15}) {
    const auto profile = oligomorphy_profile(trivial_permutation_group(degree), 3);
    long long power = 1;
    for (int n = 1; n <= 3; ++n) {
      power *= degree;
      if (profile.orbits_on(n) != power)
        ++mismatches;
    }
  }

  // Symmetric groups with m >= n give Bell numbers; pinned Bell(2), Bell(3).
  const long long bell2 = 2, bell3 = 5;
  for (int m = 2; m <= 4; ++m) {
    const auto g = symmetric_group(m);
    const auto profile = oligomorphy_profile(g, 3);
    if (profile.orbits_on(2) != bell2 ||
        orbit_count_union_find(g, 2) != bell2)
      ++mismatches;
    if (m >= 3 && (profile.orbits_on(3) != bell3 ||
                   orbit_count_union_find(g, 3) != bell3))
      ++mismatches;
  }

  std::ostringstream detail;
  detail << "carriers=" << carriers << " mismatches=" << mismatches;
  return finish("orbits", mismatches == 0 && carriers > 0, detail.str(), start,
                kOrbitBudgetMs);
}

// ---------------------------------------------------------------------------
// Criterion: strong semilattice soundness. The corpus keeps every component
// weakly reductive, which is what makes "diagrams commute" equivalent to
// "the flat map is multiplicative"; null components genuinely break the
// reverse implication.

std::vector<StrongSemilattice> sss_corpus() {
  using CM = std::map<std::pair<int, int>, std::vector<int>>;
  const auto z2 = group_sg(cyclic_group(2));
  const auto z3 = group_sg(cyclic_group(3));
  const auto z4 = group_sg(cyclic_group(4));
  const auto z6 = group_sg(cyclic_group(6));
  const auto v4 = group_sg(klein_group());
  const auto lz2 = left_zero_sg(2);
  const auto rz2 = right_zero_sg(2);
  const auto rz3 = right_zero_sg(3);
  const Semilattice chain2 = chain_semilattice(2);
  const Semilattice chain3 = chain_semilattice(3);
  const Semilattice fork = semilattice_from_table(
      {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  const Semilattice diamond = semilattice_from_table(
      {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}});

  std::vector<StrongSemilattice> out;
  out.push_back(sss_construct(chain2, {z2, z2}, CM{{{1, 0}, {0, 1}}}));
  out.push_back(sss_construct(chain2, {v4, z2}, CM{{{1, 0}, {0, 2}}}));
  out.push_back(sss_construct(chain2, {z2, z4}, CM{{{1, 0}, {0, 1, 0, 1}}}));
  out.push_back(sss_construct(chain2, {z3, z3}, CM{{{1, 0}, {0, 1, 2}}}));
  out.push_back(sss_construct(chain2, {z6, z6}, CM{{{1, 0}, {0, 1, 2, 3, 4, 5}}}));
  out.push_back(sss_construct(chain2, {lz2, lz2}, CM{{{1, 0}, {0, 1}}}));
  out.push_back(sss_construct(chain2, {rz2, rz3}, CM{{{1, 0}, {0, 1, 1}}}));
  out.push_back(sss_construct(chain3, {z2, z2, z2},
                              CM{{{1, 0}, {0, 1}},
                                 {{2, 1}, {0, 1}},
                                 {{2, 0}, {0, 1}}}));
  out.push_back(sss_construct(fork, {z2, z3, z3},
                              CM{{{1, 0}, {0, 0, 0}}, {{2, 0}, {0, 0, 0}}}));
  out.push_back(sss_construct(
      diamond, {z2, z2, z2, v4},
      CM{{{1, 0}, {0, 1}},
         {{2, 0}, {0, 1}},
         {{3, 1}, {0, 0, 1, 1}},
         {{3, 2}, {0, 0, 1, 1}},
         {{3, 0}, {0, 0, 1, 1}}}));
  out.push_back(constant_sss(chain2, {v4, v4}, {0, 0}));
  return out;
}

std::vector<int> candidate_flat_map(const StrongSemilattice &s,
                                    const std::vector<int> &pi,
                                    const std::vector<std::vector<int>> &maps) {
  std::vector<int> out(s.flatten().order);
  for (int alpha = 0; alpha < s.lattice.order; ++alpha)
    for (int x = 0; x < s.components[alpha].order; ++x)
      out[s.global_index(alpha, x)] = s.global_index(pi[alpha], maps[alpha][x]);
  return out;
}

CriterionResult criterion_sss() {
  const auto start = Clock::now();
  std::size_t instances = 0;
  std::size_t tuples = 0;
  std::size_t mismatches = 0;
  bool all_weakly_reductive = true;

  BruteForceOptions brute;
  brute.max_order = 12;

  for (const auto &s : sss_corpus()) {
    ++instances;
    if (s.flatten().order > 12) {
      ++mismatches;
      continue;
    }
    for (const auto &component : s.components)
      all_weakly_reductive =
          all_weakly_reductive && is_weakly_reductive(component);

    const int n = s.lattice.order;
    const auto lattice_autos = semilattice_automorphisms(s.lattice);
    for (const auto &pi : lattice_autos) {
      // Per-component isomorphism lists onto the pi-image component.
      std::vector<std::vector<std::vector<int>>> lists(n);
      bool feasible = true;
      for (int alpha = 0; alpha < n; ++alpha) {
        lists[alpha] = brute_force_isomorphisms(
            s.components[alpha], s.components[pi[alpha]], brute);
        feasible = feasible && !lists[alpha].empty();
      }
      if (!feasible)
        continue;

      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::vector<std::vector<int>> maps;
        for (int alpha = 0; alpha < n; ++alpha)
          maps.push_back(lists[alpha][pick[alpha]]);
        ++tuples;

        const auto violation = sss_diagram_violation(s, pi, maps);
        bool built = true;
        try {
          sss_build_automorphism(s, pi, maps);
        } catch (const ValidationError &) {
          built = false;
        }
        const auto flat = candidate_flat_map(s, pi, maps);
        const bool multiplicative =
            is_semigroup_isomorphism(s.flatten(), s.flatten(), flat);
        if (built != !violation.has_value() || multiplicative != built)
          ++mismatches;

        int digit = n - 1;
        while (digit >= 0 && ++pick[digit] == lists[digit].size()) {
          pick[digit] = 0;
          --digit;
        }
        if (digit < 0)
          break;
      }
    }
  }

  std::ostringstream detail;
  detail << "instances=" << instances << " tuples=" << tuples
         << " mismatches=" << mismatches
         << " weakly_reductive=" << (all_weakly_reductive ? "yes" : "no");
  return finish("sss", mismatches == 0 && all_weakly_reductive && tuples > 0,
                detail.str(), start, 0.0);
}

// ---------------------------------------------------------------------------
// Criterion: automorphism-purity of Clifford semigroups and normal bands.

CriterionResult criterion_purity() {
  const auto start = Clock::now();
  using CM = std::map<std::pair<int, int>, std::vector<int>>;
  const auto z2 = group_sg(cyclic_group(2));
  const auto lz2 = left_zero_sg(2);
  const auto lz3 = left_zero_sg(3);
  const auto rz2 = right_zero_sg(2);
  const auto rb22 = rectangular_band(2, 2).to_semigroup();
  const Semilattice chain2 = chain_semilattice(2);
  const Semilattice fork = semilattice_from_table(
      {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});

  std::vector<StrongSemilattice> instances;
  // Clifford: strong semilattices of groups.
  for (auto &s : sss_corpus()) {
    bool groups = true;
    for (const auto &component : s.components) {
      bool has_identity = false;
      for (int e = 0; e < component.order && !has_identity; ++e) {
        bool identity = true;
        for (int x = 0; x < component.order; ++x)
          identity = identity && component.mul(e, x) == x &&
                     component.mul(x, e) == x;
        has_identity = has_identity || identity;
      }
      const auto ids = idempotents(component);
      groups = groups && has_identity && ids.size() == 1;
    }
    if (groups)
      instances.push_back(std::move(s));
  }
  // Normal bands: strong semilattices of rectangular bands.
  instances.push_back(sss_construct(chain2, {lz2, lz2}, CM{{{1, 0}, {0, 1}}}));
  instances.push_back(sss_construct(chain2, {lz2, lz3}, CM{{{1, 0}, {0, 1, 1}}}));
  instances.push_back(sss_construct(chain2, {rz2, rz2}, CM{{{1, 0}, {0, 1}}}));
  instances.push_back(
      sss_construct(chain2, {lz2, rb22}, CM{{{1, 0}, {0, 0, 1, 1}}}));
  instances.push_back(sss_construct(fork, {z2, lz2, lz2},
                                    CM{{{1, 0}, {0, 0}}, {{2, 0}, {0, 0}}}));

  std::size_t impure = 0;
  std::size_t automorphisms = 0;
  BruteForceOptions opts;
  opts.max_order = 16;
  for (const auto &s : instances) {
    const auto report = is_automorphism_pure(s, opts);
    automorphisms += report.checked;
    if (!report.pure || report.witness.has_value())
      ++impure;
  }

  std::ostringstream detail;
  detail << "instances=" << instances.size()
         << " automorphisms=" << automorphisms << " impure=" << impure;
  return finish("purity", impure == 0 && instances.size() >= 8, detail.str(),
                start, 0.0);
}

// ---------------------------------------------------------------------------
// Criterion: psi-system and pivoted p.r.c. harnesses.

CriterionResult criterion_psi_prc() {
  const auto start = Clock::now();
  std::vector<ReesMatrixSemigroup> instances;
  instances.push_back(rees_construct(
      cyclic_group(2), sandwich_matrix(2, 2, {{0, kZ}, {kZ, 0}})));
  instances.push_back(rees_construct(
      cyclic_group(1),
      sandwich_matrix(3, 3, {{0, kZ, kZ}, {kZ, 0, kZ}, {kZ, kZ, 0}})));
  instances.push_back(compose_components(
      cyclic_group(2),
      {ReesComponent{{0}, {0}, sandwich_matrix(1, 1, {{0}})},
       ReesComponent{{1}, {1}, sandwich_matrix(1, 1, {{1}})}}));
  instances.push_back(rees_construct(cyclic_group(3),
                                     sandwich_matrix(1, 1, {{0}})));
  instances.push_back(rees_construct(cyclic_group(1),
                                     sandwich_matrix(2, 2, {{0, 0}, {0, 0}})));

  std::size_t failures = 0;
  std::size_t psi_permutations = 0;
  std::size_t prc_automorphisms = 0;

  for (const auto &s : instances) {
    if (s.order() > 12) {
      ++failures;
      continue;
    }
    const auto sg = rees_to_semigroup(s);
    const auto d = decompose_components(s);
    const int parts = static_cast<int>(d.components.size());

    // Family of component subsemigroups in global ids, each including zero.
    std::vector<std::vector<int>> family;
    std::vector<std::vector<int>> to_global_all;
    for (const auto &part : d.components) {
      const auto cs = component_semigroup(s, part);
      std::vector<int> to_global(cs.order());
      to_global[0] = 0;
      for (int li = 0; li < cs.index_size(); ++li)
        for (int g = 0; g < cs.group.order; ++g)
          for (int ll = 0; ll < cs.lambda_size(); ++ll)
            to_global[cs.encode(li, g, ll)] =
                s.encode(part.I[li], g, part.Lambda[ll]);
      to_global_all.push_back(to_global);
      auto elems = to_global;
      std::sort(elems.begin(), elems.end());
      family.push_back(elems);
    }

    // Blocks: components isomorphic by a trivial-theta iso share a block.
    const auto eta = rees_eta_classes(s, d);
    std::vector<int> block_of(parts, 0);
    for (std::size_t c = 0; c < eta.size(); ++c)
      for (int member : eta[c])
        block_of[member] = static_cast<int>(c);

    std::map<std::pair<int, int>, std::vector<std::vector<int>>> psi;
    for (int i = 0; i < parts; ++i)
      for (int j = 0; j < parts; ++j) {
        if (block_of[i] != block_of[j])
          continue;
        const auto ci = component_semigroup(s, d.components[i]);
        const auto cj = component_semigroup(s, d.components[j]);
        for (const auto &iso : trivial_theta_isos(ci, cj)) {
          const auto local = iso_as_map(ci, cj, iso);
          std::map<int, int> global_map;
          for (int x = 0; x < static_cast<int>(local.size()); ++x)
            global_map[to_global_all[i][x]] = to_global_all[j][local[x]];
          std::vector<int> aligned;
          for (int e : family[i])
            aligned.push_back(global_map[e]);
          psi[{i, j}].push_back(aligned);
        }
      }

    PsiSystemOptions popts;
    popts.brute.max_order = 16;
    const auto psi_report = psi_system_check(sg, family, block_of, psi, popts);
    psi_permutations += psi_report.permutations_checked;
    if (!psi_report.ok)
      ++failures;

    // p.r.c. on the idempotent H-classes.
    const auto h = green_H(sg);
    std::vector<std::vector<int>> subsets;
    std::vector<std::vector<int>> pivots;
    for (int e : idempotents(sg)) {
      auto cls = h.classes[h.class_of[e]];
      std::sort(cls.begin(), cls.end());
      subsets.push_back(cls);
      pivots.push_back({e});
    }
    BruteForceOptions bopts;
    bopts.max_order = 16;
    const auto prc = pivoted_prc_check(sg, subsets, pivots, bopts);
    prc_automorphisms += prc.automorphisms;
    if (!prc.ok)
      ++failures;
  }

  std::ostringstream detail;
  detail << "instances=" << instances.size()
         << " psi_permutations=" << psi_permutations
         << " prc_automorphisms=" << prc_automorphisms
         << " failures=" << failures;
  return finish("psi-prc", failures == 0, detail.str(), start, 0.0);
}

// ---------------------------------------------------------------------------
// Criterion: rectangular-band extension.

// All automorphisms fixing each subband setwise, by scanning side
// permutations; the oracle against which refusals are checked.
std::vector<BandAutomorphism> banded_automorphisms(
    const RectangularBand &band,
    const std::vector<std::vector<int>> &subbands) {
  std::vector<int> lperm(band.left_size), rperm(band.right_size);
  for (int k = 0; k < band.left_size; ++k)
    lperm[k] = k;
  std::vector<BandAutomorphism> out;
  do {
    for (int k = 0; k < band.right_size; ++k)
      rperm[k] = k;
    do {
      BandAutomorphism aut{lperm, rperm};
      bool fixes = true;
      for (const auto &subband : subbands) {
        std::set<int> image;
        for (int e : subband)
          image.insert(aut.apply(band, e));
        fixes = fixes &&
                image == std::set<int>(subband.begin(), subband.end());
      }
      if (fixes)
        out.push_back(aut);
    } while (std::next_permutation(rperm.begin(), rperm.end()));
  } while (std::next_permutation(lperm.begin(), lperm.end()));
  return out;
}

CriterionResult criterion_rb_extension() {
  const auto start = Clock::now();
  std::size_t cases = 0;
  std::size_t successes = 0;
  std::size_t mismatches = 0;

  for (int l = 1; l <= 4; ++l)
    for (int r = 1; r <= 4; ++r) {
      const auto band = rectangular_band(l, r);

      std::vector<std::vector<std::vector<int>>> families;
      families.push_back({});
      // First row, first column, and a leading block as subbands.
      std::vector<int> row0, col0, block;
      for (int c = 0; c < r; ++c)
        row0.push_back(band.index(0, c));
      for (int k = 0; k < l; ++k)
        col0.push_back(band.index(k, 0));
      for (int k = 0; k < std::min(2, l); ++k)
        for (int c = 0; c < std::min(2, r); ++c)
          block.push_back(band.index(k, c));
      families.push_back({row0});
      families.push_back({row0, col0});
      families.push_back({row0, col0, block});

      for (const auto &subbands : families) {
        const auto oracle = banded_automorphisms(band, subbands);

        // Every singleton partial map, plus strided two-point partials.
        std::vector<std::vector<std::pair<int, int>>> partials;
        for (int a = 0; a < band.order(); ++a)
          for (int b = 0; b < band.order(); ++b)
            partials.push_back({{a, b}});
        for (int a1 = 0; a1 < band.order(); ++a1)
          for (int b1 = 0; b1 < band.order(); b1 += 2)
            for (int a2 = a1 + 1; a2 < band.order(); a2 += 2)
              for (int b2 = 0; b2 < band.order(); b2 += 3)
                partials.push_back({{a1, b1}, {a2, b2}});

        for (const auto &partial : partials) {
          ++cases;
          bool produced = false;
          BandAutomorphism aut;
          try {
            aut = rb_extension_automorphism(band, subbands, partial);
            produced = true;
          } catch (const ValidationError &) {
          }

          if (produced) {
            ++successes;
            bool ok = true;
            for (const auto &[a, b] : partial)
              ok = ok && aut.apply(band, a) == b;
            for (const auto &subband : subbands) {
              std::set<int> image;
              for (int e : subband)
                image.insert(aut.apply(band, e));
              ok = ok &&
                   image == std::set<int>(subband.begin(), subband.end());
            }
            if (!ok)
              ++mismatches;
          } else {
            // Refusal must mean no banded automorphism extends the partial.
            bool extendable = false;
            for (const auto &candidate : oracle) {
              bool extends = true;
              for (const auto &[a, b] : partial)
                extends = extends && candidate.apply(band, a) == b;
              extendable = extendable || extends;
            }
            if (extendable)
              ++mismatches;
          }
        }
      }
    }

  std::ostringstream detail;
  detail << "cases=" << cases << " successes=" << successes
         << " mismatches=" << mismatches;
  return finish("rb-extension", mismatches == 0 && cases > 0, detail.str(),
                start, 0.0);
}

// ---------------------------------------------------------------------------
// Criterion: counterexample family truncation pattern over Z2 x Z2.

CriterionResult criterion_family() {
  const auto start = Clock::now();
  const auto g = klein_group();
  const int n = 4;

  std::string structured_pattern, brute_pattern;
  ReesEnumOptions eopts;
  eopts.max_order = 1024;
  eopts.limit = 1;
  BruteForceOptions bopts;
  bopts.max_order = 1024;
  bopts.limit = 1;

  for (int k = 0; k <= 3; ++k) {
    for (int m = 0; m <= 3; ++m) {
      const auto a = counterexample_family(g, k, n);
      const auto b = counterexample_family(g, m, n);
      structured_pattern += enumerate_isos(a, b, eopts).empty() ? '0' : '1';
      brute_pattern += brute_force_isomorphisms(rees_to_semigroup(a),
                                                rees_to_semigroup(b), bopts)
                               .empty()
                           ? '0'
                           : '1';
    }
    structured_pattern += ' ';
    brute_pattern += ' ';
  }

  std::ostringstream detail;
  detail << "pattern=" << structured_pattern
         << (structured_pattern == brute_pattern ? "(methods agree)"
                                                 : "(methods disagree)");
  return finish("family", structured_pattern == brute_pattern, detail.str(),
                start, 0.0);
}

using CriterionRunner = CriterionResult (*)();

const std::vector<std::pair<std::string, CriterionRunner>> &registry() {
  static const std::vector<std::pair<std::string, CriterionRunner>> table{
      {"iso-theorem", criterion_iso_theorem},
      {"calculus", criterion_calculus},
      {"idempotents", criterion_idempotents},
      {"hall", criterion_hall},
      {"graham", criterion_graham},
      {"orbits", criterion_orbits},
      {"sss", criterion_sss},
      {"purity", criterion_purity},
      {"psi-prc", criterion_psi_prc},
      {"rb-extension", criterion_rb_extension},
      {"family", criterion_family},
  };
  return table;
}

} // namespace

bool SuiteResult::all_passed() const {
  for (const auto &criterion : criteria)
    if (!criterion.passed)
      return false;
  return true;
}

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto &[name, runner] : registry())
    names.push_back(name);
  names.push_back("all");
  return names;
}

SuiteResult run_verify_suite(const std::string &name) {
  SuiteResult result;
  result.suite = name;
  if (name == "all") {
    for (const auto &[criterion, runner] : registry())
      result.criteria.push_back(runner());
    return result;
  }
  for (const auto &[criterion, runner] : registry())
    if (criterion == name) {
      result.criteria.push_back(runner());
      return result;
    }
  fail("UnknownSuite", "no verification suite named '" + name + "'");
}

std::vector<ReesMatrixSemigroup> verification_corpus() {
  std::vector<ReesMatrixSemigroup> out;
  const auto groups = corpus_groups();

  for (const auto &g : groups)
    for (int rows = 1; rows <= 3; ++rows)
      for (int cols = 1; cols <= 3; ++cols) {
        // All-identity (complete) matrix.
        out.push_back(rees_construct(
            g, sandwich_matrix(
                   rows, cols,
                   std::vector<std::vector<int>>(rows,
                                                 std::vector<int>(cols, 0)))));
        // Staircase tree.
        out.push_back(rees_construct(g, staircase(g, rows, cols)));
        // Diagonal with cycling entries.
        if (rows == cols) {
          std::vector<std::vector<int>> diag(rows, std::vector<int>(cols, kZ));
          for (int k = 0; k < rows; ++k)
            diag[k][k] = k % g.order;
          out.push_back(rees_construct(g, sandwich_matrix(rows, cols, diag)));
        }
      }

  // Truncated counterexample family members.
  for (const auto &g : groups)
    for (int k = 1; k <= std::min(3, g.order - 1); ++k)
      for (int n = std::max(k, 2); n <= 3; ++n)
        out.push_back(counterexample_family(g, k, n));

  // Seeded random regular matrices.
  std::mt19937 rng(20260824u);
  for (const auto &g : groups)
    for (int rows = 1; rows <= 3; ++rows)
      for (int cols = 1; cols <= 3; ++cols)
        for (int copy = 0; copy < 3; ++copy) {
          std::uniform_int_distribution<int> dist(0, g.order);
          for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<std::vector<int>> entries(rows,
                                                  std::vector<int>(cols));
            for (int r = 0; r < rows; ++r)
              for (int c = 0; c < cols; ++c) {
                const int draw = dist(rng);
                entries[r][c] = draw == g.order ? kZ : draw;
              }
            try {
              out.push_back(
                  rees_construct(g, sandwich_matrix(rows, cols, entries)));
              break;
            } catch (const ValidationError &) {
            }
          }
        }

  return out;
}

} // namespace semicat
