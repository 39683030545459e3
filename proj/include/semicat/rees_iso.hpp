#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semicat/rees.hpp"

namespace semicat {

// Isomorphism between Rees matrix semigroups in structured form: a group
// isomorphism theta, a bipartite iso psi of the induced graphs, and scaling
// tuples u (over I) and v (over Lambda) with values in the target group.
// The element map sends (i, g, lambda) to (i psi, u_i (g theta) v_lambda,
// lambda psi) and fixes zero. Maps compose on the right throughout.
struct ReesIso {
  GroupMap theta;
  BipartiteIso psi;
  std::vector<int> u;
  std::vector<int> v;
};

struct IsoCheck {
  bool ok = false;
  // Set when the sandwich condition fails: the offending (lambda, i).
  std::optional<std::pair<int, int>> violation;
};

// Checks that theta is a group isomorphism, psi a plain graph isomorphism of
// the induced graphs, and the sandwich condition
//   p(lambda, i) theta = v_lambda q(lambda psi, i psi) u_i
// holds at every nonzero entry. Array shape clashes raise ShapeMismatch.
IsoCheck validate_iso(const ReesMatrixSemigroup &s,
                      const ReesMatrixSemigroup &t, const ReesIso &iso);

int apply_iso(const ReesMatrixSemigroup &s, const ReesMatrixSemigroup &t,
              const ReesIso &iso, int x);

// Full element map of the iso, index by source element.
std::vector<int> iso_as_map(const ReesMatrixSemigroup &s,
                            const ReesMatrixSemigroup &t, const ReesIso &iso);

ReesIso identity_iso(const ReesMatrixSemigroup &s);

ReesIso compose_iso(const ReesMatrixSemigroup &s, const ReesMatrixSemigroup &t,
                    const ReesMatrixSemigroup &u, const ReesIso &first,
                    const ReesIso &second);

ReesIso invert_iso(const ReesMatrixSemigroup &s, const ReesMatrixSemigroup &t,
                   const ReesIso &iso);

struct ReesEnumOptions {
  int max_order = 512;
  std::optional<std::size_t> limit;
};

// All isomorphisms s -> t, one structured quadruple per element map, sorted
// by element map. For each pair (theta, psi) the scaling tuples are found by
// fixing u at the least I-vertex of every graph component (the gauge),
// propagating along a spanning tree and checking the remaining entries;
// every solution arises from exactly one gauge value per component.
std::vector<ReesIso> enumerate_isos(const ReesMatrixSemigroup &s,
                                    const ReesMatrixSemigroup &t,
                                    const ReesEnumOptions &opts = {});

// Rewrites the iso with identity theta when the same element map admits such
// a quadruple, which happens exactly when theta is conjugation by some group
// element d; then u_i d and d^-1 v_lambda give the trivialised tuples.
// Requires both semigroups to share one group table.
std::optional<ReesIso> try_trivialize(const ReesMatrixSemigroup &s,
                                      const ReesMatrixSemigroup &t,
                                      const ReesIso &iso);

// Isomorphisms admitting a trivial-theta representation, returned in that
// form (used for the eta relation between components).
std::vector<ReesIso> trivial_theta_isos(const ReesMatrixSemigroup &s,
                                        const ReesMatrixSemigroup &t,
                                        const ReesEnumOptions &opts = {});

struct GrahamNormalization {
  ReesMatrixSemigroup normalized;
  ReesIso iso; // from the input to the normalized semigroup, theta = psi = id
  std::vector<std::pair<int, int>> forest; // (lambda, i) spanning forest edges
};

// Gauge transformation making every spanning-forest entry the identity. The
// forest is grown breadth-first from the least I-vertex of each component.
GrahamNormalization graham_normalize(const ReesMatrixSemigroup &s);

// Component Rees semigroup for one block of a decomposition.
ReesMatrixSemigroup component_semigroup(const ReesMatrixSemigroup &s,
                                        const ReesComponent &part);

struct ComponentwiseDecomposition {
  std::vector<int> pi; // component permutation
  std::vector<ReesIso> parts; // per-component isos, all sharing theta
};

// Splits an automorphism along connected components: psi permutes the
// components, inducing pi, and restricts to an iso of each component pair.
ComponentwiseDecomposition decompose_by_components(
    const ReesMatrixSemigroup &s, const ReesComponentDecomposition &d,
    const ReesIso &iso);

// Classes of components under "isomorphic by a trivial-theta iso".
std::vector<std::vector<int>> rees_eta_classes(
    const ReesMatrixSemigroup &s, const ReesComponentDecomposition &d);

} // namespace semicat
