#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semicat {

// Bipartite graph with fixed left and right vertex sets. The two sides are
// never interchangeable: maps between graphs always send left to left.
// Global vertex ids run 0..L-1 for the left side, then L..L+R-1.
struct BipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::vector<bool>> adj; // adj[l][r]

  bool edge(int l, int r) const { return adj[l][r]; }
  int vertex_count() const { return left_size + right_size; }
  int degree_left(int l) const;
  int degree_right(int r) const;
  int edge_count() const;
};

// Validating constructor; sides must be nonempty and edges in range.
BipartiteGraph make_bigraph(int left_size, int right_size,
                            const std::vector<std::pair<int, int>> &edges);

BipartiteGraph complement(const BipartiteGraph &g);

// Edge-labelled bipartite graph. Labels are indices into a sorted alphabet
// of symbols; every symbol occurs on at least one edge.
struct LabelledBipartiteGraph {
  BipartiteGraph graph;
  std::vector<std::vector<int>> label; // label[l][r], -1 off edges
  std::vector<std::string> alphabet;

  const std::string &label_at(int l, int r) const {
    return alphabet[label[l][r]];
  }
};

LabelledBipartiteGraph make_labelled_bigraph(
    int left_size, int right_size,
    const std::vector<std::pair<std::pair<int, int>, std::string>> &edges);

// Composes each edge label with a bijection of the alphabet. The mapping
// must cover the alphabet exactly; anything else raises NotBijective.
LabelledBipartiteGraph relabel(
    const LabelledBipartiteGraph &g,
    const std::vector<std::pair<std::string, std::string>> &mapping);

// Pair of side bijections; left_map[l] and right_map[r] give images.
struct BipartiteIso {
  std::vector<int> left_map;
  std::vector<int> right_map;

  bool operator==(const BipartiteIso &other) const = default;
};

BipartiteIso identity_bigraph_iso(const BipartiteGraph &g);
BipartiteIso compose_bigraph_isos(const BipartiteIso &first,
                                  const BipartiteIso &second);
BipartiteIso invert_bigraph_iso(const BipartiteIso &iso);
bool is_bigraph_isomorphism(const BipartiteGraph &g, const BipartiteGraph &h,
                            const BipartiteIso &iso);
bool is_labelled_isomorphism(const LabelledBipartiteGraph &g,
                             const LabelledBipartiteGraph &h,
                             const BipartiteIso &iso);

// Connected component, as sorted original vertex indices per side.
struct GraphComponent {
  std::vector<int> left;
  std::vector<int> right;
};

// Components ordered by least global vertex id.
std::vector<GraphComponent> components(const BipartiteGraph &g);

BipartiteGraph induced_subgraph(const BipartiteGraph &g,
                                const GraphComponent &c);

// Stable colouring of the global vertex set refined from sides, degrees and
// (for the labelled variant) edge labels. Colour ids are normalised by first
// occurrence in vertex order. Vertices in one true automorphism orbit always
// share a colour; the converse can fail, so this is a pruning device only.
std::vector<int> refine_partition(const BipartiteGraph &g);
std::vector<int> refine_partition(const LabelledBipartiteGraph &g);

// First isomorphism in enumeration order, if any. Labelled comparison
// requires equal alphabets; graphs over different alphabets are never
// labelled-isomorphic (relabel first to compare across alphabets).
std::optional<BipartiteIso> bigraph_iso(const BipartiteGraph &g,
                                        const BipartiteGraph &h);
std::optional<BipartiteIso> bigraph_iso(const LabelledBipartiteGraph &g,
                                        const LabelledBipartiteGraph &h,
                                        bool respect_labels);

// All isomorphisms, sorted by (left_map, right_map).
std::vector<BipartiteIso> bigraph_isos_all(const BipartiteGraph &g,
                                           const BipartiteGraph &h);
std::vector<BipartiteIso> bigraph_isos_all(const LabelledBipartiteGraph &g,
                                           const LabelledBipartiteGraph &h,
                                           bool respect_labels);

enum class GraphClass {
  Complete,
  Empty,
  PerfectMatching,
  ComplementPerfectMatching,
  Other,
};

// Recognised homogeneous shape. Overlapping cases resolve in declaration
// order, so a single edge on 1+1 vertices reports Complete(1,1).
struct GraphClassification {
  GraphClass tag = GraphClass::Other;
  int n = 0;
  int m = 0;

  std::string str() const;
  bool operator==(const GraphClassification &other) const = default;
};

GraphClassification classify_homogeneous(const BipartiteGraph &g);

} // namespace semicat
