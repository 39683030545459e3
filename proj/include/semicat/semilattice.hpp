#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicat/semigroup.hpp"

namespace semicat {

// Finite (meet-)semilattice: a commutative band. alpha <= beta holds when
// meet(alpha, beta) == alpha; a finite semilattice always has a minimum.
struct Semilattice {
  int order = 0;
  std::vector<std::vector<int>> meet;

  int meet_of(int a, int b) const { return meet[a][b]; }
  bool leq(int a, int b) const { return meet[a][b] == a; }
};

Semilattice semilattice_from_table(const std::vector<std::vector<int>> &meet);

// 0 < 1 < ... < n-1 with meet = min.
Semilattice chain_semilattice(int n);

int semilattice_zero(const Semilattice &y);

FiniteSemigroup semilattice_as_semigroup(const Semilattice &y);

// Meet-preserving permutations of the carrier, sorted lexicographically.
std::vector<std::vector<int>> semilattice_automorphisms(const Semilattice &y);

// Strong semilattice of semigroups [Y; S_alpha; psi_{alpha,beta}]. Connectors
// are stored for strictly comparable pairs alpha > beta only; psi_{alpha,alpha}
// is the identity. Elements of the flattened semigroup are numbered
// component-major: component 0 first, then component 1, and so on.
struct StrongSemilattice {
  Semilattice lattice;
  std::vector<FiniteSemigroup> components;
  std::map<std::pair<int, int>, std::vector<int>> connectors;
  std::vector<int> offsets;
  FiniteSemigroup flat;

  int connect(int alpha, int beta, int x) const;
  int global_index(int alpha, int x) const { return offsets[alpha] + x; }
  // global element id -> (component, local index)
  std::pair<int, int> locate(int element) const;
  const FiniteSemigroup &flatten() const { return flat; }
};

StrongSemilattice sss_construct(
    const Semilattice &lattice, const std::vector<FiniteSemigroup> &components,
    const std::map<std::pair<int, int>, std::vector<int>> &connectors);

// Connectors are the constant maps onto the chosen idempotents e[beta].
StrongSemilattice constant_sss(const Semilattice &lattice,
                               const std::vector<FiniteSemigroup> &components,
                               const std::vector<int> &idempotent_choices);

// Componentwise automorphism [theta_alpha, pi]: pi permutes the semilattice
// and maps[alpha] sends S_alpha onto S_{alpha pi}.
struct SssAutomorphism {
  std::vector<int> pi;
  std::vector<std::vector<int>> maps;
};

// nullopt when every diagram [alpha,beta; alpha pi,beta pi] commutes,
// otherwise a witness (alpha, beta, element) with
// psi_{alpha,beta} theta_beta != theta_alpha psi_{alpha pi,beta pi} there.
std::optional<std::array<int, 3>> sss_diagram_violation(
    const StrongSemilattice &s, const std::vector<int> &pi,
    const std::vector<std::vector<int>> &maps);

// Validates pi, the componentwise isomorphisms and every connecting diagram;
// the result induces an automorphism of flatten().
SssAutomorphism sss_build_automorphism(const StrongSemilattice &s,
                                       const std::vector<int> &pi,
                                       const std::vector<std::vector<int>> &maps);

// The induced permutation of the flattened carrier.
std::vector<int> sss_flat_map(const StrongSemilattice &s,
                              const SssAutomorphism &aut);

struct PurityReport {
  bool pure = false;
  // Automorphisms of flatten() examined.
  std::size_t checked = 0;
  // A flat automorphism admitting no componentwise form, when impure.
  std::optional<std::vector<int>> witness;
  std::string reason;
};

// Whether every automorphism of flatten() decomposes componentwise: each
// component must map onto a component, the induced permutation of Y must
// preserve meets, and the connecting diagrams must commute.
PurityReport is_automorphism_pure(const StrongSemilattice &s,
                                  const BruteForceOptions &opts = {});

// For zero-rooted injective connectors: extend theta_0 on the bottom
// component along pi via theta_alpha = psi_{alpha,0} theta_0 psi_{alpha
// pi,0}^{-1}. Requires pi to preserve the image-set classes in S_0 and
// theta_0 to fix each image set setwise.
SssAutomorphism lift_from_zero(const StrongSemilattice &s,
                               const std::vector<int> &theta_0,
                               const std::vector<int> &pi);

// Explicit isomorphism flatten(S) -> S_base x Y when every connector is
// bijective. forward/backward are mutually inverse element maps.
struct ProductForm {
  int base = 0;
  FiniteSemigroup product;
  std::vector<int> forward;
  std::vector<int> backward;
};

ProductForm iso_to_product(const StrongSemilattice &s, int base);
ProductForm iso_to_product(const StrongSemilattice &s);

// alpha ~ beta when S_alpha and S_beta are isomorphic.
Partition sss_eta_classes(const StrongSemilattice &s,
                          const BruteForceOptions &opts = {});

// alpha ~ beta when some isomorphism S_alpha -> S_beta carries the chosen
// idempotent of alpha to the chosen idempotent of beta.
Partition sss_upsilon_classes(const StrongSemilattice &s,
                              const std::vector<int> &idempotent_choices,
                              const BruteForceOptions &opts = {});

// alpha ~ beta when the images of S_alpha and S_beta in the bottom component
// coincide.
Partition sss_xi_classes(const StrongSemilattice &s);

bool all_connectors_injective(const StrongSemilattice &s);
bool all_connectors_bijective(const StrongSemilattice &s);

} // namespace semicat
