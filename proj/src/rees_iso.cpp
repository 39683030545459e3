#include "semicat/rees_iso.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "semicat/error.hpp"

namespace semicat {
namespace {

void check_shapes(const ReesMatrixSemigroup &s, const ReesMatrixSemigroup &t,
                  const ReesIso &iso) {
  if (iso.theta.source_order != s.group.order ||
      iso.theta.target_order != t.group.order)
    fail("ShapeMismatch", "theta does not map between the two groups");
  if (s.index_size() != t.index_size() || s.lambda_size() != t.lambda_size())
    fail("ShapeMismatch", "index sets have different sizes");
  if (static_cast<int>(iso.psi.left_map.size()) != s.index_size() ||
      static_cast<int>(iso.psi.right_map.size()) != s.lambda_size())
    fail("ShapeMismatch", "psi side maps do not match the index sets");
  if (static_cast<int>(iso.u.size()) != s.index_size() ||
      static_cast<int>(iso.v.size()) != s.lambda_size())
    fail("ShapeMismatch", "scaling tuples do not match the index sets");
  for (int g : iso.u)
    if (g < 0 || g >= t.group.order)
      fail("ShapeMismatch", "u entry outside the target group");
  for (int g : iso.v)
    if (g < 0 || g >= t.group.order)
      fail("ShapeMismatch", "v entry outside the target group");
}

// Spanning forest of the induced graph, grown breadth-first from the least
// I-vertex of each component. Each record is a tree edge (lambda, i)
// together with the side it was entered from.
struct ForestEdge {
  int lambda = 0;
  int i = 0;
  bool from_i = false; // true: i was known, lambda is new
};

std::vector<ForestEdge> spanning_forest(const ReesMatrixSemigroup &s,
                                        const std::vector<GraphComponent> &comps) {
  std::vector<ForestEdge> out;
  std::vector<bool> seen_i(s.index_size(), false), seen_l(s.lambda_size(), false);
  for (const auto &c : comps) {
    const int root = c.left.front();
    seen_i[root] = true;
    std::vector<int> queue{root}; // I-vertices as i, Lambda-vertices as cols+l
    for (size_t q = 0; q < queue.size(); ++q) {
      const int v = queue[q];
      if (v < s.index_size()) {
        for (int lambda = 0; lambda < s.lambda_size(); ++lambda)
          if (!s.matrix.is_zero(lambda, v) && !seen_l[lambda]) {
            seen_l[lambda] = true;
            out.push_back({lambda, v, true});
            queue.push_back(s.index_size() + lambda);
          }
      } else {
        const int lambda = v - s.index_size();
        for (int i = 0; i < s.index_size(); ++i)
          if (!s.matrix.is_zero(lambda, i) && !seen_i[i]) {
            seen_i[i] = true;
            out.push_back({lambda, i, false});
            queue.push_back(i);
          }
      }
    }
  }
  return out;
}

} // namespace

IsoCheck validate_iso(const ReesMatrixSemigroup &s, const ReesMatrixSemigroup &t,
                      const ReesIso &iso) {
  check_shapes(s, t, iso);
  if (!is_group_isomorphism(s.group, t.group, iso.theta))
    return {false, std::nullopt};
  if (!is_bigraph_isomorphism(induced_graph(s), induced_graph(t), iso.psi))
    return {false, std::nullopt};
  for (int lambda = 0; lambda < s.lambda_size(); ++lambda)
    for (int i = 0; i < s.index_size(); ++i) {
      const int p = s.matrix.at(lambda, i);
      if (p == SandwichMatrix::kZero)
        continue;
      const int q = t.matrix.at(iso.psi.right_map[lambda], iso.psi.left_map[i]);
      const int want = t.group.mul(t.group.mul(iso.v[lambda], q), iso.u[i]);
      if (iso.theta(p) != want)
        return {false, std::pair{lambda, i}};
    }
  return {true, std::nullopt};
}

int apply_iso(const ReesMatrixSemigroup &s, const ReesMatrixSemigroup &t,
              const ReesIso &iso, int x) {
  const auto triple = s.decode(x);
  if (!triple)
    return 0;
  return t.encode(iso.psi.left_map[triple->i],
                  t.group.mul(t.group.mul(iso.u[triple->i], iso.theta(triple->g)),
                              iso.v[triple->lambda]),
                  iso.psi.right_map[triple->lambda]);
}

std::vector<int> iso_as_map(const ReesMatrixSemigroup &s,
                            const ReesMatrixSemigroup &t, const ReesIso &iso) {
  std::vector<int> map(s.order());
  for (int x = 0; x < s.order(); ++x)
    map[x] = apply_iso(s, t, iso, x);
  return map;
}

ReesIso identity_iso(const ReesMatrixSemigroup &s) {
  ReesIso iso;
  iso.theta = identity_group_map(s.group);
  iso.psi = identity_bigraph_iso(induced_graph(s));
  iso.u.assign(s.index_size(), 0);
  iso.v.assign(s.lambda_size(), 0);
  return iso;
}

ReesIso compose_iso(const ReesMatrixSemigroup &s, const ReesMatrixSemigroup &t,
                    const ReesMatrixSemigroup &u, const ReesIso &first,
                    const ReesIso &second) {
  check_shapes(s, t, first);
  check_shapes(t, u, second);
  ReesIso out;
  out.theta = compose_group_maps(first.theta, second.theta);
  out.psi = compose_bigraph_isos(first.psi, second.psi);
  out.u.resize(s.index_size());
  out.v.resize(s.lambda_size());
  for (int i = 0; i < s.index_size(); ++i)
    out.u[i] = u.group.mul(second.u[first.psi.left_map[i]],
                           second.theta(first.u[i]));
  for (int lambda = 0; lambda < s.lambda_size(); ++lambda)
    out.v[lambda] = u.group.mul(second.theta(first.v[lambda]),
                                second.v[first.psi.right_map[lambda]]);
  return out;
}

ReesIso invert_iso(const ReesMatrixSemigroup &s, const ReesMatrixSemigroup &t,
                   const ReesIso &iso) {
  check_shapes(s, t, iso);
  ReesIso out;
  out.theta = invert_group_map(iso.theta);
  out.psi = invert_bigraph_iso(iso.psi);
  out.u.resize(t.index_size());
  out.v.resize(t.lambda_size());
  for (int j = 0; j < t.index_size(); ++j)
    out.u[j] = out.theta(t.group.inv(iso.u[out.psi.left_map[j]]));
  for (int mu = 0; mu < t.lambda_size(); ++mu)
    out.v[mu] = out.theta(t.group.inv(iso.v[out.psi.right_map[mu]]));
  return out;
}

std::vector<ReesIso> enumerate_isos(const ReesMatrixSemigroup &s,
                                    const ReesMatrixSemigroup &t,
                                    const ReesEnumOptions &opts) {
  if (s.order() > opts.max_order || t.order() > opts.max_order)
    fail("SizeLimitExceeded", "order exceeds limit " +
                                  std::to_string(opts.max_order));
  std::map<std::vector<int>, ReesIso> found;
  if (s.index_size() != t.index_size() || s.lambda_size() != t.lambda_size())
    return {};

  const auto thetas = group_isomorphisms(s.group, t.group);
  if (thetas.empty())
    return {};
  const auto psis = bigraph_isos_all(induced_graph(s), induced_graph(t));
  const auto comps = components(induced_graph(s));
  const auto forest = spanning_forest(s, comps);

  // Tree edges grouped per component, in propagation order.
  std::vector<std::vector<ForestEdge>> comp_forest(comps.size());
  {
    std::vector<int> comp_of_i(s.index_size(), -1);
    for (size_t k = 0; k < comps.size(); ++k)
      for (int i : comps[k].left)
        comp_of_i[i] = static_cast<int>(k);
    for (const auto &e : forest)
      comp_forest[comp_of_i[e.i]].push_back(e);
  }

  const int g2 = t.group.order;
  bool limited = false;
  for (const auto &theta : thetas) {
    if (limited)
      break;
    for (const auto &psi : psis) {
      // Per-component scaling solutions, one candidate gauge at a time.
      std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>>
          solutions(comps.size());
      bool dead = false;
      for (size_t k = 0; k < comps.size() && !dead; ++k) {
        const auto &c = comps[k];
        for (int gauge = 0; gauge < g2; ++gauge) {
          std::vector<int> u(s.index_size(), -1), v(s.lambda_size(), -1);
          u[c.left.front()] = gauge;
          for (const auto &e : comp_forest[k]) {
            const int p = theta(s.matrix.at(e.lambda, e.i));
            const int q = t.matrix.at(psi.right_map[e.lambda], psi.left_map[e.i]);
            if (e.from_i)
              v[e.lambda] = t.group.mul(t.group.mul(p, t.group.inv(u[e.i])),
                                        t.group.inv(q));
            else
              u[e.i] = t.group.mul(t.group.inv(q),
                                   t.group.mul(t.group.inv(v[e.lambda]), p));
          }
          bool ok = true;
          for (int lambda : c.right)
            for (int i : c.left) {
              const int p = s.matrix.at(lambda, i);
              if (p == SandwichMatrix::kZero)
                continue;
              const int q = t.matrix.at(psi.right_map[lambda], psi.left_map[i]);
              if (theta(p) != t.group.mul(t.group.mul(v[lambda], q), u[i])) {
                ok = false;
                break;
              }
            }
          if (ok) {
            std::vector<int> cu, cv;
            for (int i : c.left)
              cu.push_back(u[i]);
            for (int lambda : c.right)
              cv.push_back(v[lambda]);
            solutions[k].push_back({std::move(cu), std::move(cv)});
          }
        }
        dead = solutions[k].empty();
      }
      if (dead)
        continue;

      // Cartesian product of the per-component solutions.
      std::vector<size_t> pick(comps.size(), 0);
      for (;;) {
        ReesIso iso;
        iso.theta = theta;
        iso.psi = psi;
        iso.u.assign(s.index_size(), -1);
        iso.v.assign(s.lambda_size(), -1);
        for (size_t k = 0; k < comps.size(); ++k) {
          const auto &[cu, cv] = solutions[k][pick[k]];
          for (size_t a = 0; a < comps[k].left.size(); ++a)
            iso.u[comps[k].left[a]] = cu[a];
          for (size_t b = 0; b < comps[k].right.size(); ++b)
            iso.v[comps[k].right[b]] = cv[b];
        }
        found.emplace(iso_as_map(s, t, iso), iso);

        size_t k = 0;
        while (k < comps.size() && ++pick[k] == solutions[k].size()) {
          pick[k] = 0;
          ++k;
        }
        if (k == comps.size())
          break;
      }
      if (opts.limit && found.size() >= *opts.limit) {
        limited = true;
        break;
      }
    }
  }

  std::vector<ReesIso> out;
  for (auto &[map, iso] : found) {
    out.push_back(std::move(iso));
    if (opts.limit && out.size() >= *opts.limit)
      break;
  }
  return out;
}

std::optional<ReesIso> try_trivialize(const ReesMatrixSemigroup &s,
                                      const ReesMatrixSemigroup &t,
                                      const ReesIso &iso) {
  check_shapes(s, t, iso);
  if (s.group.table != t.group.table)
    return std::nullopt;
  const auto &g = t.group;
  for (int d = 0; d < g.order; ++d) {
    bool conj = true;
    for (int x = 0; x < g.order && conj; ++x)
      conj = iso.theta(x) == g.mul(g.mul(d, x), g.inv(d));
    if (!conj)
      continue;
    ReesIso out;
    out.theta = identity_group_map(g);
    out.psi = iso.psi;
    out.u.resize(iso.u.size());
    out.v.resize(iso.v.size());
    for (size_t i = 0; i < iso.u.size(); ++i)
      out.u[i] = g.mul(iso.u[i], d);
    for (size_t l = 0; l < iso.v.size(); ++l)
      out.v[l] = g.mul(g.inv(d), iso.v[l]);
    return out;
  }
  return std::nullopt;
}

std::vector<ReesIso> trivial_theta_isos(const ReesMatrixSemigroup &s,
                                        const ReesMatrixSemigroup &t,
                                        const ReesEnumOptions &opts) {
  std::vector<ReesIso> out;
  for (const auto &iso : enumerate_isos(s, t, opts))
    if (auto trivial = try_trivialize(s, t, iso))
      out.push_back(*trivial);
  return out;
}

GrahamNormalization graham_normalize(const ReesMatrixSemigroup &s) {
  const auto comps = components(induced_graph(s));
  const auto forest = spanning_forest(s, comps);
  const auto &g = s.group;

  std::vector<int> u(s.index_size(), -1), v(s.lambda_size(), -1);
  for (const auto &c : comps)
    u[c.left.front()] = 0;
  for (const auto &e : forest) {
    const int p = s.matrix.at(e.lambda, e.i);
    if (e.from_i)
      v[e.lambda] = g.mul(p, g.inv(u[e.i]));
    else
      u[e.i] = g.mul(g.inv(v[e.lambda]), p);
  }

  std::vector<std::vector<int>> entries(s.lambda_size(),
                                        std::vector<int>(s.index_size(),
                                                         SandwichMatrix::kZero));
  for (int lambda = 0; lambda < s.lambda_size(); ++lambda)
    for (int i = 0; i < s.index_size(); ++i) {
      const int p = s.matrix.at(lambda, i);
      if (p != SandwichMatrix::kZero)
        entries[lambda][i] = g.mul(g.inv(v[lambda]), g.mul(p, g.inv(u[i])));
    }

  GrahamNormalization out;
  out.normalized = rees_construct(
      g, sandwich_matrix(s.lambda_size(), s.index_size(), entries));
  out.iso.theta = identity_group_map(g);
  out.iso.psi = identity_bigraph_iso(induced_graph(s));
  out.iso.u = std::move(u);
  out.iso.v = std::move(v);
  for (const auto &e : forest)
    out.forest.push_back({e.lambda, e.i});
  std::sort(out.forest.begin(), out.forest.end());
  return out;
}

ReesMatrixSemigroup component_semigroup(const ReesMatrixSemigroup &s,
                                        const ReesComponent &part) {
  return rees_construct(s.group, part.matrix);
}

ComponentwiseDecomposition decompose_by_components(
    const ReesMatrixSemigroup &s, const ReesComponentDecomposition &d,
    const ReesIso &iso) {
  const auto check = validate_iso(s, s, iso);
  if (!check.ok)
    fail("ShapeMismatch", "not a valid automorphism");

  std::vector<int> comp_of_i(s.index_size(), -1);
  for (size_t k = 0; k < d.components.size(); ++k)
    for (int i : d.components[k].I)
      comp_of_i[i] = static_cast<int>(k);

  ComponentwiseDecomposition out;
  out.pi.resize(d.components.size());
  for (size_t k = 0; k < d.components.size(); ++k)
    out.pi[k] = comp_of_i[iso.psi.left_map[d.components[k].I.front()]];

  auto position = [](const std::vector<int> &list, int value) {
    return static_cast<int>(std::find(list.begin(), list.end(), value) -
                            list.begin());
  };

  for (size_t k = 0; k < d.components.size(); ++k) {
    const auto &from = d.components[k];
    const auto &to = d.components[out.pi[k]];
    ReesIso part;
    part.theta = iso.theta;
    part.psi.left_map.resize(from.I.size());
    part.psi.right_map.resize(from.Lambda.size());
    part.u.resize(from.I.size());
    part.v.resize(from.Lambda.size());
    for (size_t a = 0; a < from.I.size(); ++a) {
      part.psi.left_map[a] = position(to.I, iso.psi.left_map[from.I[a]]);
      part.u[a] = iso.u[from.I[a]];
    }
    for (size_t b = 0; b < from.Lambda.size(); ++b) {
      part.psi.right_map[b] = position(to.Lambda, iso.psi.right_map[from.Lambda[b]]);
      part.v[b] = iso.v[from.Lambda[b]];
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

std::vector<std::vector<int>> rees_eta_classes(
    const ReesMatrixSemigroup &s, const ReesComponentDecomposition &d) {
  const int n = static_cast<int>(d.components.size());
  std::vector<ReesMatrixSemigroup> parts;
  parts.reserve(n);
  for (const auto &c : d.components)
    parts.push_back(component_semigroup(s, c));

  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int k = 0; k < n; ++k) {
    if (cls[k] != -1)
      continue;
    cls[k] = static_cast<int>(classes.size());
    classes.push_back({k});
    for (int l = k + 1; l < n; ++l)
      if (cls[l] == -1 && !trivial_theta_isos(parts[k], parts[l]).empty()) {
        cls[l] = cls[k];
        classes.back().push_back(l);
      }
  }
  return classes;
}

} // namespace semicat
