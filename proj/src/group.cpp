#include "semicat/group.hpp"

#include <algorithm>
#include <string>

#include "semicat/error.hpp"

namespace semicat {
namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

void check_square(const std::vector<std::vector<int>> &table) {
  const int n = static_cast<int>(table.size());
  if (n == 0)
    fail("ParseError", "empty multiplication table");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      fail("ParseError", "row " + std::to_string(x) + " has " +
                             std::to_string(table[x].size()) + " entries, expected " +
                             std::to_string(n));
    for (int y = 0; y < n; ++y)
      if (table[x][y] < 0 || table[x][y] >= n)
        fail("ParseError", "entry at (" + std::to_string(x) + "," +
                               std::to_string(y) + ") out of range");
  }
}

// Subgroup generated by gens, as a sorted element list.
std::vector<int> generated_subgroup(const std::vector<std::vector<int>> &table,
                                    const std::vector<int> &gens) {
  const int n = static_cast<int>(table.size());
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<int> work{0};
  for (int g : gens)
    if (!in[g]) {
      in[g] = true;
      work.push_back(g);
    }
  for (size_t k = 0; k < work.size(); ++k)
    for (size_t l = 0; l < work.size(); ++l) {
      for (int p : {table[work[k]][work[l]], table[work[l]][work[k]]})
        if (!in[p]) {
          in[p] = true;
          work.push_back(p);
        }
    }
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (in[x])
      out.push_back(x);
  return out;
}

std::vector<int> generating_sequence(const FiniteGroup &g) {
  std::vector<int> gens;
  std::vector<int> span = generated_subgroup(g.table, gens);
  while (static_cast<int>(span.size()) < g.order) {
    int next = 0;
    std::vector<bool> in(g.order, false);
    for (int x : span)
      in[x] = true;
    while (in[next])
      ++next;
    gens.push_back(next);
    span = generated_subgroup(g.table, gens);
  }
  return gens;
}

} // namespace

FiniteGroup group_from_table(const std::vector<std::vector<int>> &table_in) {
  check_square(table_in);
  auto table = table_in;
  const int n = static_cast<int>(table.size());

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok)
      identity = e;
  }
  if (identity < 0)
    fail("NoIdentity", "no two-sided identity element");

  if (identity != 0) {
    // Swap labels 0 and identity so the identity becomes element 0.
    std::vector<int> sigma(n);
    for (int x = 0; x < n; ++x)
      sigma[x] = x;
    std::swap(sigma[0], sigma[identity]);
    std::vector<std::vector<int>> relabelled(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        relabelled[x][y] = sigma[table[sigma[x]][sigma[y]]];
    table = std::move(relabelled);
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          fail("NotAssociative", "witness triple " + triple_str(x, y, z));

  std::vector<int> inverses(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == 0 && table[y][x] == 0) {
        inverses[x] = y;
        break;
      }
    if (inverses[x] < 0)
      fail("NoInverse", "element " + std::to_string(x) + " has no inverse");
  }

  return FiniteGroup{n, std::move(table), std::move(inverses)};
}

FiniteGroup trivial_group_table() { return cyclic_group(1); }

FiniteGroup cyclic_group(int n) {
  if (n < 1)
    fail("ParseError", "cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[x][y] = (x + y) % n;
  return group_from_table(table);
}

FiniteGroup group_direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  const int n = a.order * b.order;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto enc = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          table[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
  return group_from_table(table);
}

FiniteGroup klein_group() {
  return group_direct_product(cyclic_group(2), cyclic_group(2));
}

FiniteGroup symmetric_group_s3() {
  // Permutations of {0,1,2} in lexicographic order; product composes left
  // factor first, then right factor.
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int k = 0; k < 6; ++k)
      if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2])
        return k;
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      int prod[3];
      for (int p = 0; p < 3; ++p)
        prod[p] = perms[y][perms[x][p]];
      table[x][y] = index_of(prod);
    }
  return group_from_table(table);
}

int element_order(const FiniteGroup &g, int x) {
  int p = x, k = 1;
  while (p != 0) {
    p = g.mul(p, x);
    ++k;
  }
  return k;
}

GroupMap identity_group_map(const FiniteGroup &g) {
  GroupMap m{g.order, g.order, std::vector<int>(g.order)};
  for (int x = 0; x < g.order; ++x)
    m.images[x] = x;
  return m;
}

bool is_group_homomorphism(const FiniteGroup &g, const FiniteGroup &h,
                           const GroupMap &m) {
  if (m.source_order != g.order || m.target_order != h.order ||
      static_cast<int>(m.images.size()) != g.order)
    return false;
  for (int x : m.images)
    if (x < 0 || x >= h.order)
      return false;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (m.images[g.mul(x, y)] != h.mul(m.images[x], m.images[y]))
        return false;
  return true;
}

bool is_group_isomorphism(const FiniteGroup &g, const FiniteGroup &h,
                          const GroupMap &m) {
  if (!is_group_homomorphism(g, h, m) || g.order != h.order)
    return false;
  std::vector<bool> hit(h.order, false);
  for (int x : m.images) {
    if (hit[x])
      return false;
    hit[x] = true;
  }
  return true;
}

GroupMap compose_group_maps(const GroupMap &first, const GroupMap &second) {
  if (first.target_order != second.source_order)
    fail("DomainMismatch", "codomain of first map does not match domain of second");
  GroupMap out{first.source_order, second.target_order,
               std::vector<int>(first.images.size())};
  for (size_t x = 0; x < first.images.size(); ++x)
    out.images[x] = second.images[first.images[x]];
  return out;
}

GroupMap invert_group_map(const GroupMap &m) {
  if (m.source_order != m.target_order)
    fail("DomainMismatch", "only bijective maps between equal orders invert");
  GroupMap out{m.target_order, m.source_order, std::vector<int>(m.images.size(), -1)};
  for (size_t x = 0; x < m.images.size(); ++x) {
    if (out.images[m.images[x]] != -1)
      fail("NotBijective", "map is not injective");
    out.images[m.images[x]] = static_cast<int>(x);
  }
  return out;
}

std::vector<GroupMap> group_isomorphisms(const FiniteGroup &g,
                                         const FiniteGroup &h) {
  std::vector<GroupMap> result;
  if (g.order != h.order)
    return result;
  const int n = g.order;

  std::vector<int> ord_g(n), ord_h(n);
  for (int x = 0; x < n; ++x) {
    ord_g[x] = element_order(g, x);
    ord_h[x] = element_order(h, x);
  }
  {
    auto a = ord_g, b = ord_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      return result;
  }

  const std::vector<int> gens = generating_sequence(g);

  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  img[0] = 0;
  used[0] = true;

  // Extend the generator images to a full map by closing under products;
  // returns false on any clash with injectivity or the partial images.
  auto close = [&](std::vector<int> &full) {
    full.assign(n, -1);
    std::vector<bool> taken(n, false);
    full[0] = 0;
    taken[0] = true;
    std::vector<int> defined{0};
    for (int s : gens) {
      if (full[s] == -1) {
        if (taken[img[s]])
          return false;
        full[s] = img[s];
        taken[img[s]] = true;
        defined.push_back(s);
      } else if (full[s] != img[s])
        return false;
    }
    for (size_t a = 0; a < defined.size(); ++a)
      for (size_t b = 0; b < defined.size(); ++b) {
        const int x = defined[a], y = defined[b];
        const int z = g.mul(x, y);
        const int w = h.mul(full[x], full[y]);
        if (full[z] == -1) {
          if (taken[w])
            return false;
          full[z] = w;
          taken[w] = true;
          defined.push_back(z);
        } else if (full[z] != w)
          return false;
      }
    return static_cast<int>(defined.size()) == n;
  };

  auto search = [&](auto &&self, size_t k) -> void {
    if (k == gens.size()) {
      std::vector<int> full;
      if (!close(full))
        return;
      GroupMap m{n, n, full};
      if (is_group_isomorphism(g, h, m))
        result.push_back(std::move(m));
      return;
    }
    const int s = gens[k];
    for (int t = 0; t < n; ++t) {
      if (used[t] || ord_h[t] != ord_g[s])
        continue;
      img[s] = t;
      used[t] = true;
      self(self, k + 1);
      used[t] = false;
      img[s] = -1;
    }
  };
  search(search, 0);

  std::sort(result.begin(), result.end(),
            [](const GroupMap &a, const GroupMap &b) { return a.images < b.images; });
  return result;
}

std::vector<GroupMap> group_automorphisms(const FiniteGroup &g) {
  return group_isomorphisms(g, g);
}

} // namespace semicat
