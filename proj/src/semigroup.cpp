#include "semicat/semigroup.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "semicat/error.hpp"

namespace semicat {
namespace {

void check_table(const std::vector<std::vector<int>> &table) {
  const int n = static_cast<int>(table.size());
  if (n == 0)
    fail("ParseError", "empty multiplication table");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      fail("ParseError", "row " + std::to_string(x) + " has " +
                             std::to_string(table[x].size()) +
                             " entries, expected " + std::to_string(n));
    for (int y = 0; y < n; ++y)
      if (table[x][y] < 0 || table[x][y] >= n)
        fail("ParseError", "entry at (" + std::to_string(x) + "," +
                               std::to_string(y) + ") out of range");
  }
}

Partition partition_from_keys(const std::vector<std::vector<bool>> &keys) {
  const int n = static_cast<int>(keys.size());
  Partition p;
  p.class_of.assign(n, -1);
  std::map<std::vector<bool>, int> seen;
  for (int x = 0; x < n; ++x) {
    auto it = seen.find(keys[x]);
    if (it == seen.end()) {
      it = seen.emplace(keys[x], static_cast<int>(p.classes.size())).first;
      p.classes.emplace_back();
    }
    p.class_of[x] = it->second;
    p.classes[it->second].push_back(x);
  }
  return p;
}

std::vector<std::vector<bool>> left_ideals(const FiniteSemigroup &s) {
  // S^1 a = {a} union {x a : x in S}.
  std::vector<std::vector<bool>> ideal(s.order,
                                       std::vector<bool>(s.order, false));
  for (int a = 0; a < s.order; ++a) {
    ideal[a][a] = true;
    for (int x = 0; x < s.order; ++x)
      ideal[a][s.mul(x, a)] = true;
  }
  return ideal;
}

std::vector<std::vector<bool>> right_ideals(const FiniteSemigroup &s) {
  std::vector<std::vector<bool>> ideal(s.order,
                                       std::vector<bool>(s.order, false));
  for (int a = 0; a < s.order; ++a) {
    ideal[a][a] = true;
    for (int x = 0; x < s.order; ++x)
      ideal[a][s.mul(a, x)] = true;
  }
  return ideal;
}

// Invariant fingerprint preserved by every isomorphism; used to prune images.
struct ElementProfile {
  bool idempotent = false;
  bool zero = false;
  int l_size = 0;
  int r_size = 0;
  int h_size = 0;

  auto key() const { return std::tie(idempotent, zero, l_size, r_size, h_size); }
  bool operator==(const ElementProfile &o) const { return key() == o.key(); }
  bool operator<(const ElementProfile &o) const { return key() < o.key(); }
};

std::vector<ElementProfile> element_profiles(const FiniteSemigroup &s) {
  const Partition l = green_L(s), r = green_R(s), h = green_H(s);
  std::vector<ElementProfile> out(s.order);
  for (int x = 0; x < s.order; ++x) {
    out[x].idempotent = s.mul(x, x) == x;
    out[x].zero = s.zero && *s.zero == x;
    out[x].l_size = static_cast<int>(l.classes[l.class_of[x]].size());
    out[x].r_size = static_cast<int>(r.classes[r.class_of[x]].size());
    out[x].h_size = static_cast<int>(h.classes[h.class_of[x]].size());
  }
  return out;
}

struct ScheduleStep {
  bool forced = false;
  int x = -1; // forced: z = x * y with x, y placed earlier
  int y = -1;
  int z = -1; // element placed by this step
};

std::vector<ScheduleStep> placement_schedule(const FiniteSemigroup &s) {
  const int n = s.order;
  std::vector<bool> placed(n, false);
  std::vector<int> order;
  std::vector<ScheduleStep> steps;
  while (static_cast<int>(order.size()) < n) {
    bool found = false;
    for (size_t a = 0; a < order.size() && !found; ++a)
      for (size_t b = 0; b < order.size() && !found; ++b) {
        const int z = s.mul(order[a], order[b]);
        if (!placed[z]) {
          steps.push_back({true, order[a], order[b], z});
          placed[z] = true;
          order.push_back(z);
          found = true;
        }
      }
    if (found)
      continue;
    int z = 0;
    while (placed[z])
      ++z;
    steps.push_back({false, -1, -1, z});
    placed[z] = true;
    order.push_back(z);
  }
  return steps;
}

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Equality pattern of a vector: each slot points at the first slot holding
// the same value.
std::vector<int> equality_pattern(const std::vector<int> &v) {
  std::vector<int> p(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    size_t j = 0;
    while (v[j] != v[i])
      ++j;
    p[i] = static_cast<int>(j);
  }
  return p;
}

std::vector<int> trace_classes(int side_size,
                               const std::vector<std::vector<bool>> &member) {
  std::vector<int> cls(side_size, -1);
  std::map<std::vector<bool>, int> seen;
  int next = 0;
  for (int x = 0; x < side_size; ++x) {
    std::vector<bool> key(member.size());
    for (size_t k = 0; k < member.size(); ++k)
      key[k] = member[k][x];
    auto it = seen.find(key);
    if (it == seen.end())
      it = seen.emplace(std::move(key), next++).first;
    cls[x] = it->second;
  }
  return cls;
}

} // namespace

FiniteSemigroup semigroup_from_table(const std::vector<std::vector<int>> &table) {
  check_table(table);
  const int n = static_cast<int>(table.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          fail("NotAssociative", "witness triple (" + std::to_string(x) + "," +
                                     std::to_string(y) + "," + std::to_string(z) +
                                     ")");
  FiniteSemigroup s{n, table, std::nullopt};
  for (int z = 0; z < n && !s.zero; ++z) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[z][x] == z && table[x][z] == z;
    if (ok)
      s.zero = z;
  }
  return s;
}

std::vector<int> idempotents(const FiniteSemigroup &s) {
  std::vector<int> out;
  for (int x = 0; x < s.order; ++x)
    if (s.mul(x, x) == x)
      out.push_back(x);
  return out;
}

std::vector<int> idempotent_generated(const FiniteSemigroup &s) {
  std::vector<bool> in(s.order, false);
  std::vector<int> work;
  for (int e : idempotents(s)) {
    in[e] = true;
    work.push_back(e);
  }
  for (size_t a = 0; a < work.size(); ++a)
    for (size_t b = 0; b < work.size(); ++b) {
      const int p = s.mul(work[a], work[b]);
      if (!in[p]) {
        in[p] = true;
        work.push_back(p);
      }
    }
  std::vector<int> out;
  for (int x = 0; x < s.order; ++x)
    if (in[x])
      out.push_back(x);
  return out;
}

Partition green_L(const FiniteSemigroup &s) {
  return partition_from_keys(left_ideals(s));
}

Partition green_R(const FiniteSemigroup &s) {
  return partition_from_keys(right_ideals(s));
}

Partition green_H(const FiniteSemigroup &s) {
  const auto l = left_ideals(s), r = right_ideals(s);
  std::vector<std::vector<bool>> key(s.order);
  for (int x = 0; x < s.order; ++x) {
    key[x] = l[x];
    key[x].insert(key[x].end(), r[x].begin(), r[x].end());
  }
  return partition_from_keys(key);
}

FiniteSemigroup direct_product(const FiniteSemigroup &a,
                               const FiniteSemigroup &b) {
  const int n = a.order * b.order;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto enc = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          table[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
  return semigroup_from_table(table);
}

bool is_weakly_reductive(const FiniteSemigroup &s) {
  for (int x = 0; x < s.order; ++x)
    for (int y = x + 1; y < s.order; ++y) {
      bool separated = false;
      for (int u = 0; u < s.order && !separated; ++u)
        separated = s.mul(x, u) != s.mul(y, u) || s.mul(u, x) != s.mul(u, y);
      if (!separated)
        return false;
    }
  return true;
}

bool is_semigroup_isomorphism(const FiniteSemigroup &s,
                              const FiniteSemigroup &t,
                              const std::vector<int> &images) {
  if (s.order != t.order || static_cast<int>(images.size()) != s.order)
    return false;
  std::vector<bool> hit(t.order, false);
  for (int w : images) {
    if (w < 0 || w >= t.order || hit[w])
      return false;
    hit[w] = true;
  }
  for (int x = 0; x < s.order; ++x)
    for (int y = 0; y < s.order; ++y)
      if (images[s.mul(x, y)] != t.mul(images[x], images[y]))
        return false;
  return true;
}

std::vector<std::vector<int>> brute_force_isomorphisms(
    const FiniteSemigroup &s, const FiniteSemigroup &t,
    const BruteForceOptions &opts) {
  std::vector<std::vector<int>> result;
  if (s.order != t.order)
    return result;
  if (s.order > opts.max_order)
    fail("SizeLimitExceeded", "order " + std::to_string(s.order) +
                                  " exceeds limit " +
                                  std::to_string(opts.max_order));
  const int n = s.order;

  const auto prof_s = element_profiles(s), prof_t = element_profiles(t);
  {
    auto a = prof_s, b = prof_t;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      return result;
  }

  const auto steps = placement_schedule(s);
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  bool done = false;

  // Checks every product constraint that involves z and only placed elements.
  auto consistent = [&](int z) {
    for (int q = 0; q < n; ++q) {
      if (img[q] == -1)
        continue;
      const int zq = s.mul(z, q), qz = s.mul(q, z);
      if (img[zq] != -1 && img[zq] != t.mul(img[z], img[q]))
        return false;
      if (img[qz] != -1 && img[qz] != t.mul(img[q], img[z]))
        return false;
    }
    return true;
  };

  auto search = [&](auto &&self, size_t k) -> void {
    if (done)
      return;
    if (k == steps.size()) {
      if (is_semigroup_isomorphism(s, t, img)) {
        result.push_back(img);
        if (opts.limit && result.size() >= *opts.limit)
          done = true;
      }
      return;
    }
    const auto &st = steps[k];
    if (st.forced) {
      const int w = t.mul(img[st.x], img[st.y]);
      if (used[w] || !(prof_s[st.z] == prof_t[w]))
        return;
      img[st.z] = w;
      used[w] = true;
      if (consistent(st.z))
        self(self, k + 1);
      img[st.z] = -1;
      used[w] = false;
      return;
    }
    for (int w = 0; w < n && !done; ++w) {
      if (used[w] || !(prof_s[st.z] == prof_t[w]))
        continue;
      img[st.z] = w;
      used[w] = true;
      if (consistent(st.z))
        self(self, k + 1);
      img[st.z] = -1;
      used[w] = false;
    }
  };
  search(search, 0);

  std::sort(result.begin(), result.end());
  return result;
}

FiniteSemigroup RectangularBand::to_semigroup() const {
  const int n = order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a][b] = mul(a, b);
  return semigroup_from_table(table);
}

RectangularBand rectangular_band(int left_size, int right_size) {
  if (left_size < 1 || right_size < 1)
    fail("ParseError", "rectangular band sides must be positive");
  return RectangularBand{left_size, right_size};
}

std::vector<int> rb_left_trace(const RectangularBand &band,
                               const std::vector<std::vector<int>> &subbands) {
  std::vector<std::vector<bool>> member(subbands.size(),
                                        std::vector<bool>(band.left_size, false));
  for (size_t k = 0; k < subbands.size(); ++k)
    for (int e : subbands[k])
      member[k][band.left_of(e)] = true;
  return trace_classes(band.left_size, member);
}

std::vector<int> rb_right_trace(const RectangularBand &band,
                                const std::vector<std::vector<int>> &subbands) {
  std::vector<std::vector<bool>> member(subbands.size(),
                                        std::vector<bool>(band.right_size, false));
  for (size_t k = 0; k < subbands.size(); ++k)
    for (int e : subbands[k])
      member[k][band.right_of(e)] = true;
  return trace_classes(band.right_size, member);
}

namespace {

std::vector<int> side_permutation(const std::vector<int> &trace,
                                  const std::vector<int> &dom,
                                  const std::vector<int> &img) {
  const int n = static_cast<int>(trace.size());
  std::vector<int> perm(n, -1);
  std::vector<bool> taken(n, false);
  for (size_t s = 0; s < dom.size(); ++s) {
    perm[dom[s]] = img[s];
    taken[img[s]] = true;
  }
  int classes = *std::max_element(trace.begin(), trace.end()) + 1;
  for (int c = 0; c < classes; ++c) {
    std::vector<int> free_dom, free_img;
    for (int x = 0; x < n; ++x)
      if (trace[x] == c) {
        if (perm[x] == -1)
          free_dom.push_back(x);
        if (!taken[x])
          free_img.push_back(x);
      }
    for (size_t j = 0; j < free_dom.size(); ++j)
      perm[free_dom[j]] = free_img[j];
  }
  return perm;
}

} // namespace

BandAutomorphism rb_extension_automorphism(
    const RectangularBand &band, const std::vector<std::vector<int>> &subbands,
    const std::vector<std::pair<int, int>> &partial) {
  const int n = band.order();
  for (size_t k = 0; k < subbands.size(); ++k) {
    if (subbands[k].empty())
      fail("NotSubband", "subband " + std::to_string(k) + " is empty");
    for (int e : subbands[k])
      if (e < 0 || e >= n)
        fail("NotSubband", "subband " + std::to_string(k) +
                               " element out of range");
    for (int a : subbands[k])
      for (int b : subbands[k])
        if (std::find(subbands[k].begin(), subbands[k].end(),
                      band.mul(a, b)) == subbands[k].end())
          fail("NotSubband", "subband " + std::to_string(k) +
                                 " not closed under product at " +
                                 pair_str(a, b));
  }
  for (const auto &[a, b] : partial)
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail("ParseError", "partial match element out of range");

  const auto ltrace = rb_left_trace(band, subbands);
  const auto rtrace = rb_right_trace(band, subbands);

  std::vector<int> li, lk, rj, rl;
  for (const auto &[a, b] : partial) {
    li.push_back(band.left_of(a));
    lk.push_back(band.left_of(b));
    rj.push_back(band.right_of(a));
    rl.push_back(band.right_of(b));
  }

  for (size_t s = 0; s < partial.size(); ++s)
    if (ltrace[li[s]] != ltrace[lk[s]])
      fail("ConditionViolated",
           "condition (1) at match " + std::to_string(s) + ": left coordinates " +
               pair_str(li[s], lk[s]) + " lie in different trace classes");
  for (size_t s = 0; s < partial.size(); ++s)
    if (rtrace[rj[s]] != rtrace[rl[s]])
      fail("ConditionViolated",
           "condition (2) at match " + std::to_string(s) +
               ": right coordinates " + pair_str(rj[s], rl[s]) +
               " lie in different trace classes");
  if (equality_pattern(li) != equality_pattern(lk))
    fail("ConditionViolated",
         "condition (3): left coordinate vectors differ in equality pattern");
  if (equality_pattern(rj) != equality_pattern(rl))
    fail("ConditionViolated",
         "condition (4): right coordinate vectors differ in equality pattern");

  return BandAutomorphism{side_permutation(ltrace, li, lk),
                          side_permutation(rtrace, rj, rl)};
}

} // namespace semicat
