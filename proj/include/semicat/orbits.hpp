#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicat/semigroup.hpp"

namespace semicat {

// Permutation group on {0..degree-1} with its full, sorted element list.
struct PermutationGroup {
  int degree = 0;
  std::vector<std::vector<int>> elements;

  std::size_t order() const { return elements.size(); }
};

// Product closure of the generators; a finite set of permutations closes
// into a group. The identity is always included.
PermutationGroup closure(int degree,
                         const std::vector<std::vector<int>> &generators);

PermutationGroup trivial_permutation_group(int degree);

// All m! permutations; guarded, intended for small m.
PermutationGroup symmetric_group(int m);

// counts[k] = number of orbits on (k+1)-tuples, so counts.front() is the
// point-orbit count and counts.size() == n_max.
struct OligomorphyProfile {
  int degree = 0;
  std::vector<long long> counts;

  long long orbits_on(int n) const { return counts[n - 1]; }
};

// Orbit counts on n-tuples for n = 1..n_max via Burnside's lemma:
// |G| * counts[n] = sum over g of fix(g)^n, where fix counts fixed carrier
// points (a tuple is fixed exactly when every coordinate is).
OligomorphyProfile oligomorphy_profile(const PermutationGroup &g, int n_max);

// Independent orbit count over the full tuple space with a union-find,
// refusing when degree^n exceeds max_tuples.
long long orbit_count_union_find(const PermutationGroup &g, int n,
                                 std::size_t max_tuples = 1000000);

// A group element carrying tuple a to tuple b coordinatewise, if any.
std::optional<std::vector<int>> same_orbit_witness(const PermutationGroup &g,
                                                   const std::vector<int> &a,
                                                   const std::vector<int> &b);

// Subgroup of g fixing each listed subset setwise.
PermutationGroup set_extension_stabilizer(
    const PermutationGroup &g, const std::vector<std::vector<int>> &subsets);

// Number of equality-pattern classes of n-tuples over a carrier of the given
// size: tuples are identified when positions agree in one exactly when they
// agree in the other.
long long natural_class_count(int carrier, int n,
                              std::size_t max_tuples = 1000000);

struct PsiSystemOptions {
  BruteForceOptions brute;
  // Cap on choice tuples examined per block-preserving permutation.
  std::size_t max_combinations = 100000;
};

struct PsiSystemReport {
  bool ok = false;
  std::vector<std::string> failures;
  std::size_t permutations_checked = 0;
  std::size_t combinations_checked = 0;
};

// Checks the four conditions on a family of subsemigroups M_i of m indexed
// by 0..family.size()-1, partitioned by block_of, with candidate isomorphism
// lists psi[{i,j}] given as image vectors aligned with the sorted element
// list of M_i:
//   (1) blockmates have a nonempty isomorphism set,
//   (2) the sets are closed under composition,
//   (3) the sets are closed under inversion,
//   (4) every block-preserving permutation pi together with any choice of
//       maps phi_i in psi[{i, pi(i)}] extends to an automorphism of m.
// Extensions are searched in the brute-force automorphism list of m.
PsiSystemReport psi_system_check(
    const FiniteSemigroup &m, const std::vector<std::vector<int>> &family,
    const std::vector<int> &block_of,
    const std::map<std::pair<int, int>, std::vector<std::vector<int>>> &psi,
    const PsiSystemOptions &opts = {});

struct PrcReport {
  bool ok = false;
  std::size_t automorphisms = 0;
  // When not ok: an automorphism carrying pivot `from` to pivot `to` whose
  // restriction misses subset `to`.
  std::optional<std::vector<int>> witness;
  int from = -1;
  int to = -1;
};

// Pairwise relative characteristicity: every automorphism of m that carries
// pivot tuple pivots[i] onto pivots[j] must map subsets[i] onto subsets[j].
PrcReport pivoted_prc_check(const FiniteSemigroup &m,
                            const std::vector<std::vector<int>> &subsets,
                            const std::vector<std::vector<int>> &pivots,
                            const BruteForceOptions &opts = {});

} // namespace semicat
