#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace semicat {

// Finite semigroup given by its Cayley table. A two-sided zero, when the
// table has one, is detected at construction and cached.
struct FiniteSemigroup {
  int order = 0;
  std::vector<std::vector<int>> table; // table[x][y] = x * y
  std::optional<int> zero;

  int mul(int x, int y) const { return table[x][y]; }
};

FiniteSemigroup semigroup_from_table(const std::vector<std::vector<int>> &table);

std::vector<int> idempotents(const FiniteSemigroup &s);

// Subsemigroup generated by the idempotents, as a sorted element list.
std::vector<int> idempotent_generated(const FiniteSemigroup &s);

// Partition of the carrier; classes are sorted and ordered by least element.
struct Partition {
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
};

Partition green_L(const FiniteSemigroup &s);
Partition green_R(const FiniteSemigroup &s);
Partition green_H(const FiniteSemigroup &s);

FiniteSemigroup direct_product(const FiniteSemigroup &a,
                               const FiniteSemigroup &b);

// True when distinct elements are separated by their translations: x = y
// whenever xs = ys and sx = sy for every s.
bool is_weakly_reductive(const FiniteSemigroup &s);

struct BruteForceOptions {
  int max_order = 12;
  // Stop after this many isomorphisms when set (existence checks pass 1).
  std::optional<std::size_t> limit;
};

// All multiplication-preserving bijections s -> t as image vectors, sorted
// lexicographically. Candidate images are pruned by idempotency, zero and
// Green class sizes; products of already-placed elements get forced images,
// so the search degenerates to choosing images of a generating set.
std::vector<std::vector<int>> brute_force_isomorphisms(
    const FiniteSemigroup &s, const FiniteSemigroup &t,
    const BruteForceOptions &opts = {});

bool is_semigroup_isomorphism(const FiniteSemigroup &s,
                              const FiniteSemigroup &t,
                              const std::vector<int> &images);

// Rectangular band on left_size x right_size, stored structurally.
// Element encoding: (l, r) -> l * right_size + r.
struct RectangularBand {
  int left_size = 0;
  int right_size = 0;

  int order() const { return left_size * right_size; }
  int index(int l, int r) const { return l * right_size + r; }
  int left_of(int e) const { return e / right_size; }
  int right_of(int e) const { return e % right_size; }
  int mul(int a, int b) const { return index(left_of(a), right_of(b)); }

  FiniteSemigroup to_semigroup() const;
};

RectangularBand rectangular_band(int left_size, int right_size);

// Automorphism of a rectangular band as a pair of side permutations.
struct BandAutomorphism {
  std::vector<int> left_perm;
  std::vector<int> right_perm;

  int apply(const RectangularBand &b, int e) const {
    return b.index(left_perm[b.left_of(e)], right_perm[b.right_of(e)]);
  }
};

// Extends a partial match (a_1 -> b_1, ..., a_n -> b_n) to an automorphism
// that fixes every listed subband setwise. Subbands are element-id sets
// closed under multiplication. The four preconditions are checked in order:
// (1) left coordinates lie in the same left trace class, (2) right
// coordinates lie in the same right trace class, (3) the left coordinate
// vectors share their equality pattern, (4) likewise on the right.
// Violations raise ConditionViolated naming the condition. Unmatched
// elements are mapped ascending-to-ascending within each trace class, which
// reduces to the identity on classes without matched elements.
BandAutomorphism rb_extension_automorphism(
    const RectangularBand &band, const std::vector<std::vector<int>> &subbands,
    const std::vector<std::pair<int, int>> &partial);

// Trace classes of the left (resp. right) coordinates: two coordinates are
// equivalent when they lie in exactly the same subband footprints.
std::vector<int> rb_left_trace(const RectangularBand &band,
                               const std::vector<std::vector<int>> &subbands);
std::vector<int> rb_right_trace(const RectangularBand &band,
                                const std::vector<std::vector<int>> &subbands);

} // namespace semicat
