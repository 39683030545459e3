#include "semicat/semilattice.hpp"

#include <algorithm>
#include <set>

#include "semicat/error.hpp"

namespace semicat {

namespace {

std::string pair_str(int alpha, int beta) {
  return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

bool is_permutation_of_range(const std::vector<int> &p, int n) {
  if (static_cast<int>(p.size()) != n)
    return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v])
      return false;
    seen[v] = true;
  }
  return true;
}

bool is_meet_automorphism(const Semilattice &y, const std::vector<int> &pi) {
  if (!is_permutation_of_range(pi, y.order))
    return false;
  for (int a = 0; a < y.order; ++a)
    for (int b = 0; b < y.order; ++b)
      if (pi[y.meet[a][b]] != y.meet[pi[a]][pi[b]])
        return false;
  return true;
}

// Images of S_alpha in the bottom component, one sorted set per alpha.
std::vector<std::vector<int>> bottom_images(const StrongSemilattice &s) {
  const int zero = semilattice_zero(s.lattice);
  std::vector<std::vector<int>> images(s.lattice.order);
  for (int alpha = 0; alpha < s.lattice.order; ++alpha) {
    std::set<int> image;
    for (int x = 0; x < s.components[alpha].order; ++x)
      image.insert(s.connect(alpha, zero, x));
    images[alpha].assign(image.begin(), image.end());
  }
  return images;
}

Partition partition_from_class_keys(const std::vector<int> &class_of) {
  Partition p;
  p.class_of = class_of;
  int classes = 0;
  for (int c : class_of)
    classes = std::max(classes, c + 1);
  p.classes.resize(classes);
  for (int i = 0; i < static_cast<int>(class_of.size()); ++i)
    p.classes[class_of[i]].push_back(i);
  return p;
}

// Groups lattice indices by a pairwise equivalence; classes are numbered by
// least representative.
template <typename Related>
Partition classes_by_relation(int n, Related related) {
  std::vector<int> class_of(n, -1);
  std::vector<int> reps;
  for (int alpha = 0; alpha < n; ++alpha) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (related(reps[c], alpha)) {
        class_of[alpha] = static_cast<int>(c);
        break;
      }
    if (class_of[alpha] < 0) {
      class_of[alpha] = static_cast<int>(reps.size());
      reps.push_back(alpha);
    }
  }
  return partition_from_class_keys(class_of);
}

} // namespace

Semilattice semilattice_from_table(const std::vector<std::vector<int>> &meet) {
  const int n = static_cast<int>(meet.size());
  if (n == 0)
    fail("ParseError", "semilattice must be nonempty");
  for (const auto &row : meet) {
    if (static_cast<int>(row.size()) != n)
      fail("ParseError", "meet table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        fail("ParseError", "meet entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (meet[a][a] != a)
      fail("NotIdempotent", "meet(" + std::to_string(a) + "," +
                                std::to_string(a) + ") != " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (meet[a][b] != meet[b][a])
        fail("NotCommutative", "meet differs at " + pair_str(a, b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]])
          fail("NotAssociative", "witness (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," +
                                     std::to_string(c) + ")");
  return Semilattice{n, meet};
}

Semilattice chain_semilattice(int n) {
  if (n < 1)
    fail("ParseError", "chain length must be positive");
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      meet[a][b] = std::min(a, b);
  return Semilattice{n, meet};
}

int semilattice_zero(const Semilattice &y) {
  int z = 0;
  for (int a = 1; a < y.order; ++a)
    z = y.meet[z][a];
  return z;
}

FiniteSemigroup semilattice_as_semigroup(const Semilattice &y) {
  return semigroup_from_table(y.meet);
}

std::vector<std::vector<int>> semilattice_automorphisms(const Semilattice &y) {
  BruteForceOptions opts;
  opts.max_order = std::max(opts.max_order, y.order);
  const FiniteSemigroup s = semilattice_as_semigroup(y);
  return brute_force_isomorphisms(s, s, opts);
}

int StrongSemilattice::connect(int alpha, int beta, int x) const {
  if (alpha == beta)
    return x;
  const auto it = connectors.find({alpha, beta});
  if (it == connectors.end())
    fail("ParseError", "no connector for pair " + pair_str(alpha, beta));
  return it->second[x];
}

std::pair<int, int> StrongSemilattice::locate(int element) const {
  int alpha = static_cast<int>(components.size()) - 1;
  while (alpha > 0 && offsets[alpha] > element)
    --alpha;
  return {alpha, element - offsets[alpha]};
}

StrongSemilattice sss_construct(
    const Semilattice &lattice, const std::vector<FiniteSemigroup> &components,
    const std::map<std::pair<int, int>, std::vector<int>> &connectors) {
  const int n = lattice.order;
  if (static_cast<int>(components.size()) != n)
    fail("ParseError", "expected one component per semilattice element");
  for (const auto &c : components)
    if (c.order < 1)
      fail("ParseError", "components must be nonempty");

  for (const auto &[key, map] : connectors) {
    const auto [alpha, beta] = key;
    if (alpha < 0 || alpha >= n || beta < 0 || beta >= n || alpha == beta ||
        lattice.meet[alpha][beta] != beta)
      fail("ParseError", "connector " + pair_str(alpha, beta) +
                             " does not descend a strictly comparable pair");
    if (static_cast<int>(map.size()) != components[alpha].order)
      fail("ParseError", "connector " + pair_str(alpha, beta) + " has " +
                             std::to_string(map.size()) + " images, expected " +
                             std::to_string(components[alpha].order));
    for (int v : map)
      if (v < 0 || v >= components[beta].order)
        fail("ParseError",
             "connector " + pair_str(alpha, beta) + " image out of range");
  }
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta)
      if (alpha != beta && lattice.meet[alpha][beta] == beta &&
          !connectors.count({alpha, beta}))
        fail("ParseError", "missing connector for pair " + pair_str(alpha, beta));

  StrongSemilattice s;
  s.lattice = lattice;
  s.components = components;
  s.connectors = connectors;

  for (const auto &[key, map] : connectors) {
    const auto [alpha, beta] = key;
    const FiniteSemigroup &sa = components[alpha];
    const FiniteSemigroup &sb = components[beta];
    for (int x = 0; x < sa.order; ++x)
      for (int y = 0; y < sa.order; ++y)
        if (map[sa.mul(x, y)] != sb.mul(map[x], map[y]))
          fail("ConnectorNotHomomorphism",
               "psi" + pair_str(alpha, beta) + " breaks at product (" +
                   std::to_string(x) + "," + std::to_string(y) + ")");
  }
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta)
      for (int gamma = 0; gamma < n; ++gamma) {
        if (alpha == beta || beta == gamma)
          continue;
        if (lattice.meet[alpha][beta] != beta ||
            lattice.meet[beta][gamma] != gamma)
          continue;
        for (int x = 0; x < components[alpha].order; ++x)
          if (s.connect(beta, gamma, s.connect(alpha, beta, x)) !=
              s.connect(alpha, gamma, x))
            fail("ConnectorNotFunctorial",
                 "psi" + pair_str(alpha, beta) + "psi" + pair_str(beta, gamma) +
                     " != psi" + pair_str(alpha, gamma) + " at element " +
                     std::to_string(x));
      }

  s.offsets.resize(n, 0);
  for (int alpha = 1; alpha < n; ++alpha)
    s.offsets[alpha] = s.offsets[alpha - 1] + components[alpha - 1].order;
  const int total = s.offsets[n - 1] + components[n - 1].order;

  std::vector<std::vector<int>> table(total, std::vector<int>(total));
  for (int alpha = 0; alpha < n; ++alpha)
    for (int x = 0; x < components[alpha].order; ++x)
      for (int beta = 0; beta < n; ++beta)
        for (int y = 0; y < components[beta].order; ++y) {
          const int gamma = lattice.meet[alpha][beta];
          const int prod = components[gamma].mul(s.connect(alpha, gamma, x),
                                                 s.connect(beta, gamma, y));
          table[s.global_index(alpha, x)][s.global_index(beta, y)] =
              s.global_index(gamma, prod);
        }
  s.flat = semigroup_from_table(table);
  return s;
}

StrongSemilattice constant_sss(const Semilattice &lattice,
                               const std::vector<FiniteSemigroup> &components,
                               const std::vector<int> &idempotent_choices) {
  const int n = lattice.order;
  if (static_cast<int>(components.size()) != n ||
      static_cast<int>(idempotent_choices.size()) != n)
    fail("ParseError", "expected one component and one idempotent per element");
  for (int alpha = 0; alpha < n; ++alpha) {
    const int e = idempotent_choices[alpha];
    if (e < 0 || e >= components[alpha].order)
      fail("ParseError", "idempotent choice out of range at " +
                             std::to_string(alpha));
    if (components[alpha].mul(e, e) != e)
      fail("NotIdempotent", "element " + std::to_string(e) +
                                " of component " + std::to_string(alpha));
  }
  std::map<std::pair<int, int>, std::vector<int>> connectors;
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta)
      if (alpha != beta && lattice.meet[alpha][beta] == beta)
        connectors[{alpha, beta}] =
            std::vector<int>(components[alpha].order, idempotent_choices[beta]);
  return sss_construct(lattice, components, connectors);
}

std::optional<std::array<int, 3>> sss_diagram_violation(
    const StrongSemilattice &s, const std::vector<int> &pi,
    const std::vector<std::vector<int>> &maps) {
  const int n = s.lattice.order;
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta) {
      if (alpha == beta || s.lattice.meet[alpha][beta] != beta)
        continue;
      for (int x = 0; x < s.components[alpha].order; ++x)
        if (maps[beta][s.connect(alpha, beta, x)] !=
            s.connect(pi[alpha], pi[beta], maps[alpha][x]))
          return std::array<int, 3>{alpha, beta, x};
    }
  return std::nullopt;
}

SssAutomorphism sss_build_automorphism(
    const StrongSemilattice &s, const std::vector<int> &pi,
    const std::vector<std::vector<int>> &maps) {
  const int n = s.lattice.order;
  if (!is_meet_automorphism(s.lattice, pi))
    fail("PreconditionFails", "pi is not a semilattice automorphism");
  if (static_cast<int>(maps.size()) != n)
    fail("PreconditionFails", "expected one componentwise map per element");
  for (int alpha = 0; alpha < n; ++alpha)
    if (!is_semigroup_isomorphism(s.components[alpha], s.components[pi[alpha]],
                                  maps[alpha]))
      fail("PreconditionFails", "maps[" + std::to_string(alpha) +
                                    "] is not an isomorphism onto component " +
                                    std::to_string(pi[alpha]));
  if (const auto violation = sss_diagram_violation(s, pi, maps))
    fail("DiagramFails", "alpha=" + std::to_string((*violation)[0]) +
                             " beta=" + std::to_string((*violation)[1]) +
                             " element=" + std::to_string((*violation)[2]));
  return SssAutomorphism{pi, maps};
}

std::vector<int> sss_flat_map(const StrongSemilattice &s,
                              const SssAutomorphism &aut) {
  std::vector<int> images(s.flat.order);
  for (int alpha = 0; alpha < s.lattice.order; ++alpha)
    for (int x = 0; x < s.components[alpha].order; ++x)
      images[s.global_index(alpha, x)] =
          s.global_index(aut.pi[alpha], aut.maps[alpha][x]);
  return images;
}

PurityReport is_automorphism_pure(const StrongSemilattice &s,
                                  const BruteForceOptions &opts) {
  const auto autos = brute_force_isomorphisms(s.flat, s.flat, opts);
  PurityReport report;
  report.checked = autos.size();
  const int n = s.lattice.order;
  for (const auto &flat_map : autos) {
    std::vector<int> pi(n, -1);
    std::vector<std::vector<int>> maps(n);
    bool componentwise = true;
    for (int alpha = 0; alpha < n && componentwise; ++alpha) {
      const int target = s.locate(flat_map[s.global_index(alpha, 0)]).first;
      if (s.components[target].order != s.components[alpha].order) {
        componentwise = false;
        break;
      }
      pi[alpha] = target;
      maps[alpha].resize(s.components[alpha].order);
      for (int x = 0; x < s.components[alpha].order; ++x) {
        const auto [beta, y] = s.locate(flat_map[s.global_index(alpha, x)]);
        if (beta != target) {
          componentwise = false;
          break;
        }
        maps[alpha][x] = y;
      }
    }
    if (!componentwise) {
      report.witness = flat_map;
      report.reason = "automorphism does not map components onto components";
      return report;
    }
    if (!is_meet_automorphism(s.lattice, pi)) {
      report.witness = flat_map;
      report.reason = "induced permutation of Y does not preserve meets";
      return report;
    }
    if (const auto violation = sss_diagram_violation(s, pi, maps)) {
      report.witness = flat_map;
      report.reason = "diagram fails at alpha=" +
                      std::to_string((*violation)[0]) +
                      " beta=" + std::to_string((*violation)[1]) +
                      " element=" + std::to_string((*violation)[2]);
      return report;
    }
  }
  report.pure = true;
  return report;
}

SssAutomorphism lift_from_zero(const StrongSemilattice &s,
                               const std::vector<int> &theta_0,
                               const std::vector<int> &pi) {
  const int n = s.lattice.order;
  const int zero = semilattice_zero(s.lattice);
  if (!all_connectors_injective(s))
    fail("PreconditionFails", "connectors are not all injective");
  if (!is_meet_automorphism(s.lattice, pi))
    fail("PreconditionFails", "pi is not a semilattice automorphism");
  const FiniteSemigroup &bottom = s.components[zero];
  if (!is_semigroup_isomorphism(bottom, bottom, theta_0))
    fail("PreconditionFails", "theta_0 is not an automorphism of the bottom");

  const auto images = bottom_images(s);
  for (int alpha = 0; alpha < n; ++alpha)
    if (images[pi[alpha]] != images[alpha])
      fail("PreconditionFails",
           "pi moves the image set of alpha=" + std::to_string(alpha) +
               " (its class has a different image in the bottom component)");
  for (int alpha = 0; alpha < n; ++alpha) {
    std::vector<int> mapped;
    mapped.reserve(images[alpha].size());
    for (int v : images[alpha])
      mapped.push_back(theta_0[v]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != images[alpha])
      fail("PreconditionFails",
           "theta_0 moves the image set of alpha=" + std::to_string(alpha));
  }

  std::vector<std::vector<int>> maps(n);
  for (int alpha = 0; alpha < n; ++alpha) {
    const int target = pi[alpha];
    maps[alpha].resize(s.components[alpha].order);
    for (int x = 0; x < s.components[alpha].order; ++x) {
      const int wanted = theta_0[s.connect(alpha, zero, x)];
      int found = -1;
      for (int y = 0; y < s.components[target].order && found < 0; ++y)
        if (s.connect(target, zero, y) == wanted)
          found = y;
      if (found < 0)
        fail("PreconditionFails",
             "lifted image escapes component " + std::to_string(target));
      maps[alpha][x] = found;
    }
  }
  return sss_build_automorphism(s, pi, maps);
}

ProductForm iso_to_product(const StrongSemilattice &s, int base) {
  const int n = s.lattice.order;
  if (base < 0 || base >= n)
    fail("ParseError", "base component out of range");
  for (const auto &[key, map] : s.connectors) {
    std::vector<bool> hit(s.components[key.second].order, false);
    bool bijective = static_cast<int>(map.size()) ==
                     s.components[key.second].order;
    for (int v : map) {
      if (hit[v])
        bijective = false;
      hit[v] = true;
    }
    if (!bijective)
      fail("ConnectorNotBijective",
           "psi" + pair_str(key.first, key.second) + " is not bijective");
  }

  const int zero = semilattice_zero(s.lattice);
  // psi_{base,zero} inverted once; every element is pulled through the bottom.
  std::vector<int> pull(s.components[zero].order, -1);
  for (int x = 0; x < s.components[base].order; ++x)
    pull[s.connect(base, zero, x)] = x;

  ProductForm form;
  form.base = base;
  form.product = direct_product(s.components[base],
                                semilattice_as_semigroup(s.lattice));
  form.forward.resize(s.flat.order);
  form.backward.assign(s.flat.order, -1);
  for (int beta = 0; beta < n; ++beta)
    for (int x = 0; x < s.components[beta].order; ++x) {
      const int pulled = pull[s.connect(beta, zero, x)];
      const int image = pulled * n + beta;
      form.forward[s.global_index(beta, x)] = image;
      form.backward[image] = s.global_index(beta, x);
    }
  if (!is_semigroup_isomorphism(s.flat, form.product, form.forward))
    fail("ConnectorNotBijective",
         "product form is not an isomorphism despite bijective connectors");
  return form;
}

ProductForm iso_to_product(const StrongSemilattice &s) {
  return iso_to_product(s, semilattice_zero(s.lattice));
}

Partition sss_eta_classes(const StrongSemilattice &s,
                          const BruteForceOptions &opts) {
  BruteForceOptions existence = opts;
  existence.limit = 1;
  return classes_by_relation(s.lattice.order, [&](int alpha, int beta) {
    return !brute_force_isomorphisms(s.components[alpha], s.components[beta],
                                     existence)
                .empty();
  });
}

Partition sss_upsilon_classes(const StrongSemilattice &s,
                              const std::vector<int> &idempotent_choices,
                              const BruteForceOptions &opts) {
  if (static_cast<int>(idempotent_choices.size()) != s.lattice.order)
    fail("ParseError", "expected one idempotent per semilattice element");
  return classes_by_relation(s.lattice.order, [&](int alpha, int beta) {
    const auto isos =
        brute_force_isomorphisms(s.components[alpha], s.components[beta], opts);
    for (const auto &iso : isos)
      if (iso[idempotent_choices[alpha]] == idempotent_choices[beta])
        return true;
    return false;
  });
}

Partition sss_xi_classes(const StrongSemilattice &s) {
  const auto images = bottom_images(s);
  return classes_by_relation(s.lattice.order, [&](int alpha, int beta) {
    return images[alpha] == images[beta];
  });
}

bool all_connectors_injective(const StrongSemilattice &s) {
  for (const auto &[key, map] : s.connectors) {
    std::vector<bool> hit(s.components[key.second].order, false);
    for (int v : map) {
      if (hit[v])
        return false;
      hit[v] = true;
    }
  }
  return true;
}

bool all_connectors_bijective(const StrongSemilattice &s) {
  if (!all_connectors_injective(s))
    return false;
  for (const auto &[key, map] : s.connectors)
    if (static_cast<int>(map.size()) != s.components[key.second].order)
      return false;
  return true;
}

} // namespace semicat
