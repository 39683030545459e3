#include "semicat/rees.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "semicat/error.hpp"
#include "semicat/rees_iso.hpp"

namespace semicat {

SandwichMatrix sandwich_matrix(int rows, int cols,
                               const std::vector<std::vector<int>> &entries) {
  if (rows < 1 || cols < 1)
    fail("ParseError", "sandwich matrix must have positive dimensions");
  if (static_cast<int>(entries.size()) != rows)
    fail("ParseError", "expected " + std::to_string(rows) + " matrix rows");
  for (const auto &row : entries)
    if (static_cast<int>(row.size()) != cols)
      fail("ParseError", "expected " + std::to_string(cols) +
                             " entries per matrix row");
  return SandwichMatrix{rows, cols, entries};
}

int ReesMatrixSemigroup::multiply(int x, int y) const {
  if (x == 0 || y == 0)
    return 0;
  const auto a = *decode(x), b = *decode(y);
  const int p = matrix.at(a.lambda, b.i);
  if (p == SandwichMatrix::kZero)
    return 0;
  return encode(a.i, group.mul(group.mul(a.g, p), b.g), b.lambda);
}

ReesMatrixSemigroup rees_construct(FiniteGroup group, SandwichMatrix matrix) {
  for (int lambda = 0; lambda < matrix.rows; ++lambda)
    for (int i = 0; i < matrix.cols; ++i) {
      const int e = matrix.at(lambda, i);
      if (e != SandwichMatrix::kZero && (e < 0 || e >= group.order))
        fail("ParseError", "matrix entry at row " + std::to_string(lambda) +
                               ", column " + std::to_string(i) +
                               " is not a group element");
    }
  for (int lambda = 0; lambda < matrix.rows; ++lambda) {
    bool nonzero = false;
    for (int i = 0; i < matrix.cols && !nonzero; ++i)
      nonzero = !matrix.is_zero(lambda, i);
    if (!nonzero)
      fail("NotRegular", "row " + std::to_string(lambda) + " is all zero");
  }
  for (int i = 0; i < matrix.cols; ++i) {
    bool nonzero = false;
    for (int lambda = 0; lambda < matrix.rows && !nonzero; ++lambda)
      nonzero = !matrix.is_zero(lambda, i);
    if (!nonzero)
      fail("NotRegular", "column " + std::to_string(i) + " is all zero");
  }
  return ReesMatrixSemigroup{std::move(group), std::move(matrix)};
}

std::vector<int> rees_idempotents(const ReesMatrixSemigroup &s) {
  std::vector<int> out{0};
  for (int lambda = 0; lambda < s.lambda_size(); ++lambda)
    for (int i = 0; i < s.index_size(); ++i) {
      const int p = s.matrix.at(lambda, i);
      if (p != SandwichMatrix::kZero)
        out.push_back(s.encode(i, s.group.inv(p), lambda));
    }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteSemigroup rees_to_semigroup(const ReesMatrixSemigroup &s) {
  const int n = s.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[x][y] = s.multiply(x, y);
  return semigroup_from_table(table);
}

BipartiteGraph induced_graph(const ReesMatrixSemigroup &s) {
  std::vector<std::pair<int, int>> edges;
  for (int lambda = 0; lambda < s.lambda_size(); ++lambda)
    for (int i = 0; i < s.index_size(); ++i)
      if (!s.matrix.is_zero(lambda, i))
        edges.push_back({i, lambda});
  return make_bigraph(s.index_size(), s.lambda_size(), edges);
}

LabelledBipartiteGraph induced_labelled_graph(const ReesMatrixSemigroup &s) {
  std::vector<std::pair<std::pair<int, int>, std::string>> edges;
  for (int lambda = 0; lambda < s.lambda_size(); ++lambda)
    for (int i = 0; i < s.index_size(); ++i)
      if (!s.matrix.is_zero(lambda, i))
        edges.push_back({{i, lambda}, std::to_string(s.matrix.at(lambda, i))});
  return make_labelled_bigraph(s.index_size(), s.lambda_size(), edges);
}

ReesComponentDecomposition decompose_components(const ReesMatrixSemigroup &s) {
  const auto comps = components(induced_graph(s));
  ReesComponentDecomposition d;
  for (const auto &c : comps) {
    ReesComponent part;
    part.I = c.left;
    part.Lambda = c.right;
    std::vector<std::vector<int>> sub(part.Lambda.size(),
                                      std::vector<int>(part.I.size()));
    for (size_t a = 0; a < part.Lambda.size(); ++a)
      for (size_t b = 0; b < part.I.size(); ++b)
        sub[a][b] = s.matrix.at(part.Lambda[a], part.I[b]);
    part.matrix = sandwich_matrix(static_cast<int>(part.Lambda.size()),
                                  static_cast<int>(part.I.size()), sub);
    d.components.push_back(std::move(part));
    d.row_perm.insert(d.row_perm.end(), c.right.begin(), c.right.end());
    d.col_perm.insert(d.col_perm.end(), c.left.begin(), c.left.end());
  }
  return d;
}

SandwichMatrix block_form(const ReesMatrixSemigroup &s,
                          const ReesComponentDecomposition &d) {
  std::vector<std::vector<int>> entries(s.lambda_size(),
                                        std::vector<int>(s.index_size()));
  for (int r = 0; r < s.lambda_size(); ++r)
    for (int c = 0; c < s.index_size(); ++c)
      entries[r][c] = s.matrix.at(d.row_perm[r], d.col_perm[c]);
  return sandwich_matrix(s.lambda_size(), s.index_size(), entries);
}

ReesMatrixSemigroup compose_components(const FiniteGroup &group,
                                       const std::vector<ReesComponent> &parts) {
  std::set<int> rows_seen, cols_seen;
  int rows = 0, cols = 0;
  for (size_t k = 0; k < parts.size(); ++k) {
    const auto &p = parts[k];
    if (static_cast<int>(p.Lambda.size()) != p.matrix.rows ||
        static_cast<int>(p.I.size()) != p.matrix.cols)
      fail("ParseError", "component " + std::to_string(k) +
                             " index sets do not match its matrix shape");
    for (int r : p.Lambda) {
      if (!rows_seen.insert(r).second)
        fail("IndexCollision",
             "row index " + std::to_string(r) + " used by two components");
      rows = std::max(rows, r + 1);
    }
    for (int c : p.I) {
      if (!cols_seen.insert(c).second)
        fail("IndexCollision",
             "column index " + std::to_string(c) + " used by two components");
      cols = std::max(cols, c + 1);
    }
  }
  if (static_cast<int>(rows_seen.size()) != rows ||
      static_cast<int>(cols_seen.size()) != cols)
    fail("ParseError", "component index sets must cover 0..n-1 on both sides");

  std::vector<std::vector<int>> entries(rows,
                                        std::vector<int>(cols, SandwichMatrix::kZero));
  for (const auto &p : parts)
    for (size_t a = 0; a < p.Lambda.size(); ++a)
      for (size_t b = 0; b < p.I.size(); ++b)
        entries[p.Lambda[a]][p.I[b]] = p.matrix.at(static_cast<int>(a),
                                                   static_cast<int>(b));
  return rees_construct(group, sandwich_matrix(rows, cols, entries));
}

StructuralPredicates structural_predicates(const ReesMatrixSemigroup &s) {
  StructuralPredicates out;

  auto pure_entries = [](const SandwichMatrix &m) {
    for (const auto &row : m.entries)
      for (int e : row)
        if (e != SandwichMatrix::kZero && e != 0)
          return false;
    return true;
  };

  out.is_pure_literal = pure_entries(s.matrix);
  out.is_pure_matrix = pure_entries(graham_normalize(s).normalized.matrix);

  out.is_brandt = s.matrix.rows == s.matrix.cols;
  if (out.is_brandt)
    for (int lambda = 0; lambda < s.matrix.rows && out.is_brandt; ++lambda) {
      int nonzero = 0;
      for (int i = 0; i < s.matrix.cols; ++i)
        if (!s.matrix.is_zero(lambda, i)) {
          ++nonzero;
          if (s.matrix.at(lambda, i) != 0)
            out.is_brandt = false;
        }
      if (nonzero != 1)
        out.is_brandt = false;
    }
  if (out.is_brandt)
    for (int i = 0; i < s.matrix.cols && out.is_brandt; ++i) {
      int nonzero = 0;
      for (int lambda = 0; lambda < s.matrix.rows; ++lambda)
        if (!s.matrix.is_zero(lambda, i))
          ++nonzero;
      if (nonzero != 1)
        out.is_brandt = false;
    }

  const auto table = rees_to_semigroup(s);
  const auto egen = idempotent_generated(table);
  const auto h = green_H(table);
  out.is_pure_houghton = true;
  for (size_t a = 0; a < egen.size() && out.is_pure_houghton; ++a)
    for (size_t b = a + 1; b < egen.size() && out.is_pure_houghton; ++b)
      if (h.class_of[egen[a]] == h.class_of[egen[b]])
        out.is_pure_houghton = false;

  const auto e = rees_idempotents(s);
  const std::set<int> eset(e.begin(), e.end());
  out.is_orthodox = true;
  for (int x : e)
    for (int y : e)
      if (!eset.count(table.mul(x, y))) {
        out.is_orthodox = false;
        break;
      }

  return out;
}

ReesMatrixSemigroup counterexample_family(const FiniteGroup &group, int k,
                                          int n) {
  if (n < 1)
    fail("ParseError", "truncation size must be positive");
  if (k < 0 || k > n)
    fail("NotEnoughElements", "need 0 <= k <= n, got k = " + std::to_string(k) +
                                  ", n = " + std::to_string(n));
  if (k > group.order - 1)
    fail("NotEnoughElements", "group has only " +
                                  std::to_string(group.order - 1) +
                                  " non-identity elements, need " +
                                  std::to_string(k));
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
  for (int m = 0; m < k; ++m)
    entries[m][m] = m + 1;
  return rees_construct(group, sandwich_matrix(n, n, entries));
}

std::vector<std::pair<int, int>> gamma_tuple(const ReesMatrixSemigroup &s,
                                             const std::vector<int> &elements) {
  std::vector<std::pair<int, int>> out;
  for (int x : elements) {
    if (x < 0 || x >= s.order())
      fail("ParseError", "element " + std::to_string(x) + " out of range");
    const auto t = s.decode(x);
    if (!t)
      fail("ZeroEntry", "the zero element has no vertex pair");
    out.push_back({t->i, t->lambda});
  }
  return out;
}

} // namespace semicat
