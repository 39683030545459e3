#include "semicat/orbits.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "semicat/error.hpp"

namespace semicat {

namespace {

void check_permutation(const std::vector<int> &p, int degree) {
  if (static_cast<int>(p.size()) != degree)
    fail("DegreeMismatch", "permutation has degree " +
                               std::to_string(p.size()) + ", expected " +
                               std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v])
      fail("NotBijective", "not a permutation of the carrier");
    seen[v] = true;
  }
}

std::vector<int> identity_perm(int degree) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

std::vector<int> compose_perm(const std::vector<int> &first,
                              const std::vector<int> &second) {
  std::vector<int> out(first.size());
  for (std::size_t k = 0; k < first.size(); ++k)
    out[k] = second[first[k]];
  return out;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[a] = b;
  }
};

} // namespace

PermutationGroup closure(int degree,
                         const std::vector<std::vector<int>> &generators) {
  if (degree < 1)
    fail("ParseError", "degree must be positive");
  for (const auto &g : generators)
    check_permutation(g, degree);

  std::set<std::vector<int>> elements;
  elements.insert(identity_perm(degree));
  std::vector<std::vector<int>> frontier(elements.begin(), elements.end());
  for (const auto &g : generators)
    if (elements.insert(g).second)
      frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto &a : frontier)
      for (const auto &g : generators) {
        auto p = compose_perm(a, g);
        if (elements.insert(p).second)
          next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  PermutationGroup group;
  group.degree = degree;
  group.elements.assign(elements.begin(), elements.end());
  return group;
}

PermutationGroup trivial_permutation_group(int degree) {
  return closure(degree, {});
}

PermutationGroup symmetric_group(int m) {
  if (m < 1)
    fail("ParseError", "degree must be positive");
  if (m > 8)
    fail("SizeLimitExceeded", "refusing to materialize Sym(" +
                                  std::to_string(m) + ")");
  PermutationGroup group;
  group.degree = m;
  std::vector<int> p = identity_perm(m);
  do {
    group.elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group;
}

OligomorphyProfile oligomorphy_profile(const PermutationGroup &g, int n_max) {
  if (n_max < 1)
    fail("ParseError", "n_max must be positive");
  if (g.elements.empty())
    fail("ParseError", "group has no elements");

  std::vector<int> fixed;
  fixed.reserve(g.elements.size());
  for (const auto &p : g.elements) {
    int f = 0;
    for (int k = 0; k < g.degree; ++k)
      if (p[k] == k)
        ++f;
    fixed.push_back(f);
  }

  OligomorphyProfile profile;
  profile.degree = g.degree;
  for (int n = 1; n <= n_max; ++n) {
    unsigned __int128 sum = 0;
    for (int f : fixed) {
      unsigned __int128 pw = 1;
      for (int k = 0; k < n; ++k) {
        pw *= static_cast<unsigned>(f);
        if (pw > (static_cast<unsigned __int128>(1) << 100))
          fail("Overflow", "fixed-point power exceeds the accumulator range");
      }
      sum += pw;
    }
    const unsigned __int128 orbits = sum / g.elements.size();
    if (sum % g.elements.size() != 0)
      fail("Overflow", "Burnside sum not divisible by the group order");
    if (orbits > static_cast<unsigned __int128>(
                     std::numeric_limits<long long>::max()))
      fail("Overflow", "orbit count does not fit a 64-bit integer");
    profile.counts.push_back(static_cast<long long>(orbits));
  }
  return profile;
}

long long orbit_count_union_find(const PermutationGroup &g, int n,
                                 std::size_t max_tuples) {
  if (n < 1)
    fail("ParseError", "tuple length must be positive");
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) {
    if (total > max_tuples / static_cast<std::size_t>(g.degree))
      fail("SizeLimitExceeded",
           "tuple space exceeds " + std::to_string(max_tuples));
    total *= static_cast<std::size_t>(g.degree);
  }

  std::vector<std::size_t> powers(n, 1);
  for (int k = 1; k < n; ++k)
    powers[k] = powers[k - 1] * static_cast<std::size_t>(g.degree);

  UnionFind uf(total);
  std::vector<int> digits(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int k = 0; k < n; ++k) {
      digits[k] = static_cast<int>(rest % g.degree);
      rest /= g.degree;
    }
    for (const auto &p : g.elements) {
      std::size_t image = 0;
      for (int k = 0; k < n; ++k)
        image += powers[k] * static_cast<std::size_t>(p[digits[k]]);
      uf.unite(static_cast<int>(idx), static_cast<int>(image));
    }
  }
  long long orbits = 0;
  for (std::size_t idx = 0; idx < total; ++idx)
    if (uf.find(static_cast<int>(idx)) == static_cast<int>(idx))
      ++orbits;
  return orbits;
}

std::optional<std::vector<int>> same_orbit_witness(const PermutationGroup &g,
                                                   const std::vector<int> &a,
                                                   const std::vector<int> &b) {
  if (a.size() != b.size())
    fail("ShapeMismatch", "tuples have different lengths");
  for (int v : a)
    if (v < 0 || v >= g.degree)
      fail("ParseError", "tuple entry out of range");
  for (int v : b)
    if (v < 0 || v >= g.degree)
      fail("ParseError", "tuple entry out of range");
  for (const auto &p : g.elements) {
    bool match = true;
    for (std::size_t k = 0; k < a.size() && match; ++k)
      match = p[a[k]] == b[k];
    if (match)
      return p;
  }
  return std::nullopt;
}

PermutationGroup set_extension_stabilizer(
    const PermutationGroup &g, const std::vector<std::vector<int>> &subsets) {
  std::vector<std::vector<bool>> member(subsets.size(),
                                        std::vector<bool>(g.degree, false));
  for (std::size_t s = 0; s < subsets.size(); ++s)
    for (int v : subsets[s]) {
      if (v < 0 || v >= g.degree)
        fail("ParseError", "subset entry out of range");
      member[s][v] = true;
    }
  PermutationGroup out;
  out.degree = g.degree;
  for (const auto &p : g.elements) {
    bool keeps = true;
    for (std::size_t s = 0; s < subsets.size() && keeps; ++s)
      for (int v : subsets[s]) {
        if (!member[s][p[v]]) {
          keeps = false;
          break;
        }
      }
    if (keeps)
      out.elements.push_back(p);
  }
  return out;
}

long long natural_class_count(int carrier, int n, std::size_t max_tuples) {
  if (carrier < 1 || n < 1)
    fail("ParseError", "carrier size and tuple length must be positive");
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) {
    if (total > max_tuples / static_cast<std::size_t>(carrier))
      fail("SizeLimitExceeded",
           "tuple space exceeds " + std::to_string(max_tuples));
    total *= static_cast<std::size_t>(carrier);
  }
  std::set<std::vector<int>> patterns;
  std::vector<int> digits(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int k = 0; k < n; ++k) {
      digits[k] = static_cast<int>(rest % carrier);
      rest /= carrier;
    }
    // First-occurrence labelling is a canonical form for the equality pattern.
    std::vector<int> pattern(n);
    std::vector<int> label(carrier, -1);
    int next = 0;
    for (int k = 0; k < n; ++k) {
      if (label[digits[k]] < 0)
        label[digits[k]] = next++;
      pattern[k] = label[digits[k]];
    }
    patterns.insert(pattern);
  }
  return static_cast<long long>(patterns.size());
}

namespace {

// Position of each carrier element within a sorted subset list, -1 outside.
std::vector<int> position_index(const std::vector<int> &sorted_elements,
                                int carrier) {
  std::vector<int> pos(carrier, -1);
  for (std::size_t k = 0; k < sorted_elements.size(); ++k)
    pos[sorted_elements[k]] = static_cast<int>(k);
  return pos;
}

bool is_sub_iso(const FiniteSemigroup &m, const std::vector<int> &from,
                const std::vector<int> &from_pos, const std::vector<int> &to,
                const std::vector<int> &to_pos, const std::vector<int> &map) {
  if (map.size() != from.size() || from.size() != to.size())
    return false;
  std::vector<bool> hit(to.size(), false);
  for (int image : map) {
    if (image < 0 || image >= m.order || to_pos[image] < 0)
      return false;
    if (hit[to_pos[image]])
      return false;
    hit[to_pos[image]] = true;
  }
  for (std::size_t x = 0; x < from.size(); ++x)
    for (std::size_t y = 0; y < from.size(); ++y) {
      const int prod = m.mul(from[x], from[y]);
      if (from_pos[prod] < 0)
        return false;
      if (map[from_pos[prod]] != m.mul(map[x], map[y]))
        return false;
    }
  return true;
}

} // namespace

PsiSystemReport psi_system_check(
    const FiniteSemigroup &m, const std::vector<std::vector<int>> &family,
    const std::vector<int> &block_of,
    const std::map<std::pair<int, int>, std::vector<std::vector<int>>> &psi,
    const PsiSystemOptions &opts) {
  const int n = static_cast<int>(family.size());
  if (n == 0)
    fail("ParseError", "family must be nonempty");
  if (static_cast<int>(block_of.size()) != n)
    fail("ParseError", "expected one block per family member");

  std::vector<std::vector<int>> positions;
  positions.reserve(family.size());
  for (int i = 0; i < n; ++i) {
    const auto &elems = family[i];
    if (elems.empty())
      fail("ParseError", "family member " + std::to_string(i) + " is empty");
    if (!std::is_sorted(elems.begin(), elems.end()) ||
        std::adjacent_find(elems.begin(), elems.end()) != elems.end())
      fail("ParseError", "family member " + std::to_string(i) +
                             " must be a sorted set");
    for (int v : elems)
      if (v < 0 || v >= m.order)
        fail("ParseError", "family member " + std::to_string(i) +
                               " has an element out of range");
    positions.push_back(position_index(elems, m.order));
    for (int x : elems)
      for (int y : elems)
        if (positions[i][m.mul(x, y)] < 0)
          fail("ParseError", "family member " + std::to_string(i) +
                                 " is not a subsemigroup");
  }

  int blocks = 0;
  for (int b : block_of) {
    if (b < 0)
      fail("ParseError", "block labels must be nonnegative");
    blocks = std::max(blocks, b + 1);
  }

  auto psi_list = [&](int i, int j) -> const std::vector<std::vector<int>> & {
    static const std::vector<std::vector<int>> empty;
    const auto it = psi.find({i, j});
    return it == psi.end() ? empty : it->second;
  };

  for (const auto &[key, list] : psi) {
    const auto [i, j] = key;
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail("ParseError", "psi key out of range");
    for (const auto &map : list)
      if (!is_sub_iso(m, family[i], positions[i], family[j], positions[j], map))
        fail("ParseError", "psi(" + std::to_string(i) + "," +
                               std::to_string(j) +
                               ") contains a non-isomorphism");
  }

  PsiSystemReport report;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of[i] == block_of[j] && psi_list(i, j).empty())
        report.failures.push_back(
            "(3.1) Psi(" + std::to_string(i) + "," + std::to_string(j) +
            ") is empty although both indices lie in block " +
            std::to_string(block_of[i]));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (const auto &first : psi_list(i, j))
          for (const auto &second : psi_list(j, l)) {
            std::vector<int> comp(first.size());
            for (std::size_t k = 0; k < first.size(); ++k)
              comp[k] = second[positions[j][first[k]]];
            const auto &targets = psi_list(i, l);
            if (std::find(targets.begin(), targets.end(), comp) ==
                targets.end()) {
              report.failures.push_back(
                  "(3.2) a composition Psi(" + std::to_string(i) + "," +
                  std::to_string(j) + ") * Psi(" + std::to_string(j) + "," +
                  std::to_string(l) + ") is missing from Psi(" +
                  std::to_string(i) + "," + std::to_string(l) + ")");
            }
          }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto &map : psi_list(i, j)) {
        std::vector<int> inv(map.size());
        for (std::size_t k = 0; k < map.size(); ++k)
          inv[positions[j][map[k]]] = family[i][k];
        const auto &targets = psi_list(j, i);
        if (std::find(targets.begin(), targets.end(), inv) == targets.end())
          report.failures.push_back("(3.3) the inverse of a Psi(" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) +
                                    ") element is missing from Psi(" +
                                    std::to_string(j) + "," +
                                    std::to_string(i) + ")");
      }

  const auto autos = brute_force_isomorphisms(m, m, opts.brute);

  // Block-preserving permutations of the index set, built blockwise.
  std::vector<std::vector<int>> block_members(blocks);
  for (int i = 0; i < n; ++i)
    block_members[block_of[i]].push_back(i);
  std::vector<std::vector<int>> block_perms(blocks);

  std::vector<int> pi(n);
  std::vector<std::vector<int>> local(blocks);
  for (int b = 0; b < blocks; ++b) {
    local[b].resize(block_members[b].size());
    std::iota(local[b].begin(), local[b].end(), 0);
  }

  bool more = true;
  while (more) {
    for (int b = 0; b < blocks; ++b)
      for (std::size_t k = 0; k < block_members[b].size(); ++k)
        pi[block_members[b][k]] = block_members[b][local[b][k]];
    ++report.permutations_checked;

    std::size_t combos = 1;
    bool feasible = true;
    for (int i = 0; i < n && feasible; ++i) {
      const std::size_t options = psi_list(i, pi[i]).size();
      if (options == 0) {
        feasible = false; // no choice tuple exists; (3.4) holds vacuously
        break;
      }
      if (combos > opts.max_combinations / options)
        fail("SizeLimitExceeded",
             "choice tuples exceed " + std::to_string(opts.max_combinations));
      combos *= options;
    }

    if (feasible) {
      std::vector<std::size_t> choice(n, 0);
      bool exhausted = false;
      while (!exhausted) {
        ++report.combinations_checked;
        std::vector<int> required(m.order, -1);
        bool consistent = true;
        for (int i = 0; i < n && consistent; ++i) {
          const auto &map = psi_list(i, pi[i])[choice[i]];
          for (std::size_t k = 0; k < map.size(); ++k) {
            const int x = family[i][k];
            if (required[x] >= 0 && required[x] != map[k]) {
              consistent = false;
              break;
            }
            required[x] = map[k];
          }
        }
        bool extended = false;
        if (consistent)
          for (const auto &aut : autos) {
            bool matches = true;
            for (int x = 0; x < m.order && matches; ++x)
              matches = required[x] < 0 || aut[x] == required[x];
            if (matches) {
              extended = true;
              break;
            }
          }
        if (!extended) {
          std::string pi_str;
          for (int i = 0; i < n; ++i)
            pi_str += (i ? "," : "") + std::to_string(pi[i]);
          report.failures.push_back(
              "(3.4) no automorphism extends a choice tuple for pi=[" +
              pi_str + "]");
        }

        int pos = n - 1;
        while (pos >= 0) {
          if (++choice[pos] < psi_list(pos, pi[pos]).size())
            break;
          choice[pos] = 0;
          --pos;
        }
        exhausted = pos < 0;
      }
    }

    int b = blocks - 1;
    while (b >= 0 && !std::next_permutation(local[b].begin(), local[b].end()))
      --b;
    more = b >= 0;
  }

  report.ok = report.failures.empty();
  return report;
}

PrcReport pivoted_prc_check(const FiniteSemigroup &m,
                            const std::vector<std::vector<int>> &subsets,
                            const std::vector<std::vector<int>> &pivots,
                            const BruteForceOptions &opts) {
  if (subsets.size() != pivots.size())
    fail("ShapeMismatch", "expected one pivot per subset");
  const std::size_t r = subsets.size();
  for (std::size_t i = 1; i < r; ++i)
    if (pivots[i].size() != pivots[0].size())
      fail("ShapeMismatch", "pivot tuples must share one length");
  for (const auto &subset : subsets) {
    if (!std::is_sorted(subset.begin(), subset.end()) ||
        std::adjacent_find(subset.begin(), subset.end()) != subset.end())
      fail("ParseError", "subsets must be sorted sets");
    for (int v : subset)
      if (v < 0 || v >= m.order)
        fail("ParseError", "subset entry out of range");
  }
  for (const auto &pivot : pivots)
    for (int v : pivot)
      if (v < 0 || v >= m.order)
        fail("ParseError", "pivot entry out of range");

  std::vector<std::vector<bool>> member(r, std::vector<bool>(m.order, false));
  for (std::size_t i = 0; i < r; ++i)
    for (int v : subsets[i])
      member[i][v] = true;

  const auto autos = brute_force_isomorphisms(m, m, opts);
  PrcReport report;
  report.automorphisms = autos.size();
  for (const auto &aut : autos)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        bool pivot_match = true;
        for (std::size_t k = 0; k < pivots[i].size() && pivot_match; ++k)
          pivot_match = aut[pivots[i][k]] == pivots[j][k];
        if (!pivot_match)
          continue;
        std::size_t landed = 0;
        bool inside = true;
        for (int v : subsets[i]) {
          if (!member[j][aut[v]]) {
            inside = false;
            break;
          }
          ++landed;
        }
        if (!inside || landed != subsets[j].size()) {
          report.witness = aut;
          report.from = static_cast<int>(i);
          report.to = static_cast<int>(j);
          return report;
        }
      }
  report.ok = true;
  return report;
}

} // namespace semicat
