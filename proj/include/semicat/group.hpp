#pragma once

#include <vector>

namespace semicat {

// Finite group given by its Cayley table. The identity is always element 0;
// group_from_table relabels the input if its identity sits elsewhere.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table; // table[x][y] = x * y
  std::vector<int> inverses;

  int mul(int x, int y) const { return table[x][y]; }
  int inv(int x) const { return inverses[x]; }
};

FiniteGroup group_from_table(const std::vector<std::vector<int>> &table);

FiniteGroup trivial_group_table();
FiniteGroup cyclic_group(int n);
FiniteGroup group_direct_product(const FiniteGroup &a, const FiniteGroup &b);
FiniteGroup klein_group();
FiniteGroup symmetric_group_s3();

// Order of a single element, i.e. least k >= 1 with x^k = identity.
int element_order(const FiniteGroup &g, int x);

// Map between two groups, stored as the image of every source element.
struct GroupMap {
  int source_order = 0;
  int target_order = 0;
  std::vector<int> images;

  int operator()(int x) const { return images[x]; }
  bool operator==(const GroupMap &other) const = default;
};

GroupMap identity_group_map(const FiniteGroup &g);
bool is_group_homomorphism(const FiniteGroup &g, const FiniteGroup &h,
                           const GroupMap &m);
bool is_group_isomorphism(const FiniteGroup &g, const FiniteGroup &h,
                          const GroupMap &m);

// Composition applies first, then second (maps act on the right throughout).
GroupMap compose_group_maps(const GroupMap &first, const GroupMap &second);
GroupMap invert_group_map(const GroupMap &m);

// All isomorphisms g -> h, sorted lexicographically by image vector; for
// g == h the identity automorphism therefore comes first. Backtracks over
// generator images so it stays cheap well past oracle-checkable sizes.
std::vector<GroupMap> group_isomorphisms(const FiniteGroup &g,
                                         const FiniteGroup &h);
std::vector<GroupMap> group_automorphisms(const FiniteGroup &g);

} // namespace semicat
