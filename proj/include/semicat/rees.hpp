#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semicat/bigraph.hpp"
#include "semicat/group.hpp"
#include "semicat/semigroup.hpp"

namespace semicat {

// Sandwich matrix over a group with zero adjoined. Rows are indexed by
// Lambda, columns by I; kZero marks a zero entry.
struct SandwichMatrix {
  static constexpr int kZero = -1;

  int rows = 0; // |Lambda|
  int cols = 0; // |I|
  std::vector<std::vector<int>> entries;

  int at(int lambda, int i) const { return entries[lambda][i]; }
  bool is_zero(int lambda, int i) const { return entries[lambda][i] == kZero; }
};

SandwichMatrix sandwich_matrix(int rows, int cols,
                               const std::vector<std::vector<int>> &entries);

// Rees matrix semigroup over a group with zero, M0(G; I, Lambda; P).
// Element encoding: 0 is the zero; the triple (i, g, lambda) becomes
// 1 + (i*|G| + g)*|Lambda| + lambda, which is stable across runs.
struct ReesMatrixSemigroup {
  FiniteGroup group;
  SandwichMatrix matrix;

  struct Triple {
    int i = 0;
    int g = 0;
    int lambda = 0;

    bool operator==(const Triple &other) const = default;
  };

  int index_size() const { return matrix.cols; }
  int lambda_size() const { return matrix.rows; }
  int order() const { return matrix.cols * group.order * matrix.rows + 1; }

  int encode(int i, int g, int lambda) const {
    return 1 + (i * group.order + g) * matrix.rows + lambda;
  }
  int encode(const Triple &t) const { return encode(t.i, t.g, t.lambda); }
  std::optional<Triple> decode(int x) const {
    if (x == 0)
      return std::nullopt;
    const int v = x - 1;
    return Triple{v / (group.order * matrix.rows),
                  (v / matrix.rows) % group.order, v % matrix.rows};
  }
  int multiply(int x, int y) const;
};

// Validates entry ranges and regularity (no all-zero row or column).
ReesMatrixSemigroup rees_construct(FiniteGroup group, SandwichMatrix matrix);

// Idempotents by the closed formula: zero together with every
// (i, p(lambda,i)^-1, lambda) at a nonzero entry. Sorted element ids.
std::vector<int> rees_idempotents(const ReesMatrixSemigroup &s);

FiniteSemigroup rees_to_semigroup(const ReesMatrixSemigroup &s);

// Induced bipartite graph: I on the left, Lambda on the right, an edge at
// every nonzero entry. The labelled variant carries the entry values.
BipartiteGraph induced_graph(const ReesMatrixSemigroup &s);
LabelledBipartiteGraph induced_labelled_graph(const ReesMatrixSemigroup &s);

// One connected Rees component: global index sets plus the submatrix.
struct ReesComponent {
  std::vector<int> I;
  std::vector<int> Lambda;
  SandwichMatrix matrix;
};

struct ReesComponentDecomposition {
  std::vector<ReesComponent> components;
  // Block-form orderings: position k holds the original row (resp. column)
  // index that moves to position k.
  std::vector<int> row_perm;
  std::vector<int> col_perm;
};

ReesComponentDecomposition decompose_components(const ReesMatrixSemigroup &s);

// The sandwich matrix rewritten in block-diagonal order.
SandwichMatrix block_form(const ReesMatrixSemigroup &s,
                          const ReesComponentDecomposition &d);

// Rebuilds a semigroup from components with explicit index sets. The sets
// must be disjoint (IndexCollision otherwise) and cover 0..n-1 on each side.
ReesMatrixSemigroup compose_components(const FiniteGroup &group,
                                       const std::vector<ReesComponent> &parts);

struct StructuralPredicates {
  bool is_brandt = false;
  bool is_pure_literal = false;  // entries of the given matrix in {0, 1}
  bool is_pure_matrix = false;   // entries in {0, 1} after normalization
  bool is_pure_houghton = false; // a, b in <E(S)> and a H b imply a = b
  bool is_orthodox = false;      // E(S) closed under multiplication
};

StructuralPredicates structural_predicates(const ReesMatrixSemigroup &s);

// n x n all-nonzero matrix with the first k non-identity group elements on
// the leading diagonal and identity entries elsewhere.
ReesMatrixSemigroup counterexample_family(const FiniteGroup &group, int k,
                                          int n);

// Vertex tuple of a nonzero element list: (i, lambda) per element, in the
// induced graph's index convention. Zero raises ZeroEntry.
std::vector<std::pair<int, int>> gamma_tuple(const ReesMatrixSemigroup &s,
                                             const std::vector<int> &elements);

} // namespace semicat
