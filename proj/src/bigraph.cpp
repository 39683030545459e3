#include "semicat/bigraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "semicat/error.hpp"

namespace semicat {

int BipartiteGraph::degree_left(int l) const {
  int d = 0;
  for (int r = 0; r < right_size; ++r)
    d += adj[l][r];
  return d;
}

int BipartiteGraph::degree_right(int r) const {
  int d = 0;
  for (int l = 0; l < left_size; ++l)
    d += adj[l][r];
  return d;
}

int BipartiteGraph::edge_count() const {
  int e = 0;
  for (int l = 0; l < left_size; ++l)
    e += degree_left(l);
  return e;
}

BipartiteGraph make_bigraph(int left_size, int right_size,
                            const std::vector<std::pair<int, int>> &edges) {
  if (left_size < 1 || right_size < 1)
    fail("ParseError", "both vertex classes must be nonempty");
  BipartiteGraph g{left_size, right_size,
                   std::vector<std::vector<bool>>(
                       left_size, std::vector<bool>(right_size, false))};
  for (const auto &[l, r] : edges) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size)
      fail("ParseError", "edge (" + std::to_string(l) + "," +
                             std::to_string(r) + ") out of range");
    g.adj[l][r] = true;
  }
  return g;
}

BipartiteGraph complement(const BipartiteGraph &g) {
  BipartiteGraph c = g;
  for (int l = 0; l < g.left_size; ++l)
    for (int r = 0; r < g.right_size; ++r)
      c.adj[l][r] = !g.adj[l][r];
  return c;
}

LabelledBipartiteGraph make_labelled_bigraph(
    int left_size, int right_size,
    const std::vector<std::pair<std::pair<int, int>, std::string>> &edges) {
  std::vector<std::pair<int, int>> plain;
  plain.reserve(edges.size());
  for (const auto &e : edges)
    plain.push_back(e.first);
  LabelledBipartiteGraph g;
  g.graph = make_bigraph(left_size, right_size, plain);

  std::set<std::string> symbols;
  for (const auto &e : edges)
    symbols.insert(e.second);
  g.alphabet.assign(symbols.begin(), symbols.end());

  g.label.assign(left_size, std::vector<int>(right_size, -1));
  for (const auto &[pos, sym] : edges) {
    const int idx = static_cast<int>(
        std::lower_bound(g.alphabet.begin(), g.alphabet.end(), sym) -
        g.alphabet.begin());
    if (g.label[pos.first][pos.second] != -1 &&
        g.label[pos.first][pos.second] != idx)
      fail("ParseError", "edge (" + std::to_string(pos.first) + "," +
                             std::to_string(pos.second) +
                             ") listed twice with different labels");
    g.label[pos.first][pos.second] = idx;
  }
  return g;
}

LabelledBipartiteGraph relabel(
    const LabelledBipartiteGraph &g,
    const std::vector<std::pair<std::string, std::string>> &mapping) {
  std::map<std::string, std::string> map;
  std::set<std::string> targets;
  for (const auto &[from, to] : mapping) {
    if (!map.emplace(from, to).second)
      fail("NotBijective", "symbol '" + from + "' mapped twice");
    if (!targets.insert(to).second)
      fail("NotBijective", "symbol '" + to + "' hit twice");
  }
  if (map.size() != g.alphabet.size())
    fail("NotBijective", "mapping must cover the alphabet exactly");
  for (const auto &sym : g.alphabet)
    if (!map.count(sym))
      fail("NotBijective", "alphabet symbol '" + sym + "' not mapped");

  std::vector<std::pair<std::pair<int, int>, std::string>> edges;
  for (int l = 0; l < g.graph.left_size; ++l)
    for (int r = 0; r < g.graph.right_size; ++r)
      if (g.graph.adj[l][r])
        edges.push_back({{l, r}, map.at(g.label_at(l, r))});
  return make_labelled_bigraph(g.graph.left_size, g.graph.right_size, edges);
}

BipartiteIso identity_bigraph_iso(const BipartiteGraph &g) {
  BipartiteIso iso;
  iso.left_map.resize(g.left_size);
  iso.right_map.resize(g.right_size);
  for (int l = 0; l < g.left_size; ++l)
    iso.left_map[l] = l;
  for (int r = 0; r < g.right_size; ++r)
    iso.right_map[r] = r;
  return iso;
}

BipartiteIso compose_bigraph_isos(const BipartiteIso &first,
                                  const BipartiteIso &second) {
  BipartiteIso out;
  out.left_map.resize(first.left_map.size());
  out.right_map.resize(first.right_map.size());
  for (size_t l = 0; l < first.left_map.size(); ++l)
    out.left_map[l] = second.left_map[first.left_map[l]];
  for (size_t r = 0; r < first.right_map.size(); ++r)
    out.right_map[r] = second.right_map[first.right_map[r]];
  return out;
}

BipartiteIso invert_bigraph_iso(const BipartiteIso &iso) {
  BipartiteIso out;
  out.left_map.assign(iso.left_map.size(), -1);
  out.right_map.assign(iso.right_map.size(), -1);
  for (size_t l = 0; l < iso.left_map.size(); ++l)
    out.left_map[iso.left_map[l]] = static_cast<int>(l);
  for (size_t r = 0; r < iso.right_map.size(); ++r)
    out.right_map[iso.right_map[r]] = static_cast<int>(r);
  return out;
}

namespace {

bool is_bijection(const std::vector<int> &map, int n) {
  if (static_cast<int>(map.size()) != n)
    return false;
  std::vector<bool> hit(n, false);
  for (int v : map) {
    if (v < 0 || v >= n || hit[v])
      return false;
    hit[v] = true;
  }
  return true;
}

} // namespace

bool is_bigraph_isomorphism(const BipartiteGraph &g, const BipartiteGraph &h,
                            const BipartiteIso &iso) {
  if (g.left_size != h.left_size || g.right_size != h.right_size)
    return false;
  if (!is_bijection(iso.left_map, g.left_size) ||
      !is_bijection(iso.right_map, g.right_size))
    return false;
  for (int l = 0; l < g.left_size; ++l)
    for (int r = 0; r < g.right_size; ++r)
      if (g.adj[l][r] != h.adj[iso.left_map[l]][iso.right_map[r]])
        return false;
  return true;
}

bool is_labelled_isomorphism(const LabelledBipartiteGraph &g,
                             const LabelledBipartiteGraph &h,
                             const BipartiteIso &iso) {
  if (!is_bigraph_isomorphism(g.graph, h.graph, iso))
    return false;
  if (g.alphabet != h.alphabet)
    return false;
  for (int l = 0; l < g.graph.left_size; ++l)
    for (int r = 0; r < g.graph.right_size; ++r)
      if (g.graph.adj[l][r] &&
          g.label_at(l, r) != h.label_at(iso.left_map[l], iso.right_map[r]))
        return false;
  return true;
}

std::vector<GraphComponent> components(const BipartiteGraph &g) {
  const int total = g.vertex_count();
  std::vector<int> comp(total, -1);
  int count = 0;
  for (int start = 0; start < total; ++start) {
    if (comp[start] != -1)
      continue;
    const int id = count++;
    std::vector<int> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v < g.left_size) {
        for (int r = 0; r < g.right_size; ++r)
          if (g.adj[v][r] && comp[g.left_size + r] == -1) {
            comp[g.left_size + r] = id;
            stack.push_back(g.left_size + r);
          }
      } else {
        const int r = v - g.left_size;
        for (int l = 0; l < g.left_size; ++l)
          if (g.adj[l][r] && comp[l] == -1) {
            comp[l] = id;
            stack.push_back(l);
          }
      }
    }
  }
  std::vector<GraphComponent> out(count);
  for (int l = 0; l < g.left_size; ++l)
    out[comp[l]].left.push_back(l);
  for (int r = 0; r < g.right_size; ++r)
    out[comp[g.left_size + r]].right.push_back(r);
  return out;
}

BipartiteGraph induced_subgraph(const BipartiteGraph &g,
                                const GraphComponent &c) {
  BipartiteGraph sub;
  sub.left_size = static_cast<int>(c.left.size());
  sub.right_size = static_cast<int>(c.right.size());
  sub.adj.assign(sub.left_size, std::vector<bool>(sub.right_size, false));
  for (int a = 0; a < sub.left_size; ++a)
    for (int b = 0; b < sub.right_size; ++b)
      sub.adj[a][b] = g.adj[c.left[a]][c.right[b]];
  return sub;
}

namespace {

// Iterated neighbourhood refinement over the disjoint union of up to two
// graphs, so colours are directly comparable between them. Labels, when
// present, must already be interned over a common alphabet.
std::vector<std::vector<int>> joint_refinement(
    const std::vector<const BipartiteGraph *> &graphs,
    const std::vector<const std::vector<std::vector<int>> *> &labels) {
  std::vector<std::vector<int>> colour(graphs.size());
  for (size_t k = 0; k < graphs.size(); ++k) {
    colour[k].assign(graphs[k]->vertex_count(), 0);
    for (int r = 0; r < graphs[k]->right_size; ++r)
      colour[k][graphs[k]->left_size + r] = 1;
  }
  int classes = 2;
  for (;;) {
    using Fingerprint = std::pair<int, std::vector<std::pair<int, int>>>;
    std::map<Fingerprint, int> intern;
    std::vector<std::vector<int>> next(graphs.size());
    for (size_t k = 0; k < graphs.size(); ++k) {
      const BipartiteGraph &g = *graphs[k];
      next[k].assign(g.vertex_count(), 0);
      for (int v = 0; v < g.vertex_count(); ++v) {
        Fingerprint fp;
        fp.first = colour[k][v];
        if (v < g.left_size) {
          for (int r = 0; r < g.right_size; ++r)
            if (g.adj[v][r])
              fp.second.push_back({labels[k] ? (*labels[k])[v][r] : 0,
                                   colour[k][g.left_size + r]});
        } else {
          const int r = v - g.left_size;
          for (int l = 0; l < g.left_size; ++l)
            if (g.adj[l][r])
              fp.second.push_back({labels[k] ? (*labels[k])[l][r] : 0,
                                   colour[k][l]});
        }
        std::sort(fp.second.begin(), fp.second.end());
        auto it = intern.find(fp);
        if (it == intern.end())
          it = intern.emplace(std::move(fp), static_cast<int>(intern.size()))
                   .first;
        next[k][v] = it->second;
      }
    }
    const int new_classes = static_cast<int>(intern.size());
    if (new_classes == classes)
      return next;
    classes = new_classes;
    colour = std::move(next);
  }
}

std::vector<int> normalise_colours(const std::vector<int> &raw) {
  std::map<int, int> first_seen;
  std::vector<int> out(raw.size());
  for (size_t v = 0; v < raw.size(); ++v) {
    auto it = first_seen.find(raw[v]);
    if (it == first_seen.end())
      it = first_seen.emplace(raw[v], static_cast<int>(first_seen.size())).first;
    out[v] = it->second;
  }
  return out;
}

// Static search order: each vertex is adjacent to an earlier one whenever the
// graph allows it, so adjacency constraints bite immediately.
std::vector<int> search_order(const BipartiteGraph &g) {
  const int total = g.vertex_count();
  std::vector<bool> placed(total, false);
  std::vector<int> order;
  auto adjacent_to_placed = [&](int v) {
    if (v < g.left_size) {
      for (int r = 0; r < g.right_size; ++r)
        if (g.adj[v][r] && placed[g.left_size + r])
          return true;
    } else {
      const int r = v - g.left_size;
      for (int l = 0; l < g.left_size; ++l)
        if (g.adj[l][r] && placed[l])
          return true;
    }
    return false;
  };
  while (static_cast<int>(order.size()) < total) {
    int pick = -1;
    for (int v = 0; v < total && pick == -1; ++v)
      if (!placed[v] && adjacent_to_placed(v))
        pick = v;
    for (int v = 0; v < total && pick == -1; ++v)
      if (!placed[v])
        pick = v;
    placed[pick] = true;
    order.push_back(pick);
  }
  return order;
}

std::vector<BipartiteIso> iso_search(
    const BipartiteGraph &g, const std::vector<std::vector<int>> *lg,
    const BipartiteGraph &h, const std::vector<std::vector<int>> *lh,
    std::size_t limit) {
  std::vector<BipartiteIso> out;
  if (g.left_size != h.left_size || g.right_size != h.right_size)
    return out;

  const auto colours = joint_refinement({&g, &h}, {lg, lh});
  {
    auto a = colours[0], b = colours[1];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      return out;
  }

  const auto order = search_order(g);
  std::vector<int> lmap(g.left_size, -1), rmap(g.right_size, -1);
  std::vector<bool> lused(h.left_size, false), rused(h.right_size, false);

  auto compatible = [&](int v, int w) {
    if (colours[0][v] != colours[1][w])
      return false;
    if (v < g.left_size) {
      for (int r = 0; r < g.right_size; ++r) {
        if (rmap[r] == -1)
          continue;
        if (g.adj[v][r] != h.adj[w][rmap[r]])
          return false;
        if (lg && g.adj[v][r] && (*lg)[v][r] != (*lh)[w][rmap[r]])
          return false;
      }
    } else {
      const int r = v - g.left_size, s = w - h.left_size;
      for (int l = 0; l < g.left_size; ++l) {
        if (lmap[l] == -1)
          continue;
        if (g.adj[l][r] != h.adj[lmap[l]][s])
          return false;
        if (lg && g.adj[l][r] && (*lg)[l][r] != (*lh)[lmap[l]][s])
          return false;
      }
    }
    return true;
  };

  auto search = [&](auto &&self, size_t k) -> void {
    if (out.size() >= limit)
      return;
    if (k == order.size()) {
      out.push_back(BipartiteIso{lmap, rmap});
      return;
    }
    const int v = order[k];
    if (v < g.left_size) {
      for (int w = 0; w < h.left_size && out.size() < limit; ++w) {
        if (lused[w] || !compatible(v, w))
          continue;
        lmap[v] = w;
        lused[w] = true;
        self(self, k + 1);
        lmap[v] = -1;
        lused[w] = false;
      }
    } else {
      const int r = v - g.left_size;
      for (int s = 0; s < h.right_size && out.size() < limit; ++s) {
        if (rused[s] || !compatible(v, h.left_size + s))
          continue;
        rmap[r] = s;
        rused[s] = true;
        self(self, k + 1);
        rmap[r] = -1;
        rused[s] = false;
      }
    }
  };
  search(search, 0);

  std::sort(out.begin(), out.end(), [](const BipartiteIso &a, const BipartiteIso &b) {
    return std::tie(a.left_map, a.right_map) < std::tie(b.left_map, b.right_map);
  });
  return out;
}

} // namespace

std::vector<int> refine_partition(const BipartiteGraph &g) {
  return normalise_colours(joint_refinement({&g}, {nullptr})[0]);
}

std::vector<int> refine_partition(const LabelledBipartiteGraph &g) {
  return normalise_colours(joint_refinement({&g.graph}, {&g.label})[0]);
}

std::optional<BipartiteIso> bigraph_iso(const BipartiteGraph &g,
                                        const BipartiteGraph &h) {
  auto found = iso_search(g, nullptr, h, nullptr, 1);
  if (found.empty())
    return std::nullopt;
  return found.front();
}

std::optional<BipartiteIso> bigraph_iso(const LabelledBipartiteGraph &g,
                                        const LabelledBipartiteGraph &h,
                                        bool respect_labels) {
  if (!respect_labels)
    return bigraph_iso(g.graph, h.graph);
  if (g.alphabet != h.alphabet)
    return std::nullopt;
  auto found = iso_search(g.graph, &g.label, h.graph, &h.label, 1);
  if (found.empty())
    return std::nullopt;
  return found.front();
}

std::vector<BipartiteIso> bigraph_isos_all(const BipartiteGraph &g,
                                           const BipartiteGraph &h) {
  return iso_search(g, nullptr, h, nullptr,
                    std::numeric_limits<std::size_t>::max());
}

std::vector<BipartiteIso> bigraph_isos_all(const LabelledBipartiteGraph &g,
                                           const LabelledBipartiteGraph &h,
                                           bool respect_labels) {
  if (!respect_labels)
    return bigraph_isos_all(g.graph, h.graph);
  if (g.alphabet != h.alphabet)
    return {};
  return iso_search(g.graph, &g.label, h.graph, &h.label,
                    std::numeric_limits<std::size_t>::max());
}

std::string GraphClassification::str() const {
  switch (tag) {
  case GraphClass::Complete:
    return "Complete(" + std::to_string(n) + "," + std::to_string(m) + ")";
  case GraphClass::Empty:
    return "Empty(" + std::to_string(n) + "," + std::to_string(m) + ")";
  case GraphClass::PerfectMatching:
    return "PerfectMatching(" + std::to_string(n) + ")";
  case GraphClass::ComplementPerfectMatching:
    return "ComplementPerfectMatching(" + std::to_string(n) + ")";
  case GraphClass::Other:
    return "Other";
  }
  return "Other";
}

GraphClassification classify_homogeneous(const BipartiteGraph &g) {
  const int edges = g.edge_count();
  if (edges == g.left_size * g.right_size)
    return {GraphClass::Complete, g.left_size, g.right_size};
  if (edges == 0)
    return {GraphClass::Empty, g.left_size, g.right_size};
  if (g.left_size == g.right_size) {
    auto is_matching = [&](const BipartiteGraph &x) {
      for (int l = 0; l < x.left_size; ++l)
        if (x.degree_left(l) != 1)
          return false;
      for (int r = 0; r < x.right_size; ++r)
        if (x.degree_right(r) != 1)
          return false;
      return true;
    };
    if (is_matching(g))
      return {GraphClass::PerfectMatching, g.left_size, g.left_size};
    if (is_matching(complement(g)))
      return {GraphClass::ComplementPerfectMatching, g.left_size, g.left_size};
  }
  return {GraphClass::Other, g.left_size, g.right_size};
}

} // namespace semicat
