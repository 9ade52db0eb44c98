#include "pcolor/connections.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcolor {

namespace {

using Path = std::vector<ConnectionStep>;

// Level-synchronous BFS over +-Sigma computing, for every reachable state,
// the lexicographically smallest among the shortest step sequences starting
// with (start, 0).  Keeping only the lex-min path per settled state is
// enough: sequences of equal length compare by their first difference, so a
// prefix that already lost can never win after extension.
std::map<GroupElement, Path> shortest_paths(const RestrictedSupport& support,
                                            const GroupElement& start) {
  const GroupSpec& grp = support.group();
  std::vector<ConnectionStep> edges;
  for (const GroupElement& ge : support.step_elements()) {
    for (const GroupElement& k : support.shifts()) edges.push_back({ge, k});
  }
  std::sort(edges.begin(), edges.end());

  std::map<GroupElement, Path> best;
  std::map<GroupElement, Path> frontier;
  frontier.emplace(start, Path{{start, grp.zero()}});
  while (!frontier.empty()) {
    for (auto& [s, p] : frontier) best.emplace(s, p);
    std::map<GroupElement, Path> next;
    for (const auto& [s, p] : frontier) {
      for (const ConnectionStep& e : edges) {
        const GroupElement t = grp.add(s, grp.add(e.g, e.k));
        if (!support.in_pm_sigma(t) || best.count(t)) continue;
        Path cand = p;
        cand.push_back(e);
        auto it = next.find(t);
        if (it == next.end()) {
          next.emplace(t, std::move(cand));
        } else if (cand < it->second) {
          it->second = std::move(cand);
        }
      }
    }
    frontier = std::move(next);
  }
  return best;
}

// Witness toward one target from a precomputed path map: the better of the
// paths ending at +h and at -h (shorter first, then lexicographic, +1 sign
// preferred when h == -h).
std::optional<Connection> witness_from_paths(const GroupSpec& grp,
                                             const std::map<GroupElement, Path>& paths,
                                             const GroupElement& h) {
  const GroupElement minus_h = grp.neg(h);
  std::optional<Connection> out;
  for (const auto& [target, sign] : {std::pair{h, +1}, std::pair{minus_h, -1}}) {
    auto it = paths.find(target);
    if (it == paths.end()) continue;
    Connection cand{it->second, sign};
    if (!out || cand.steps.size() < out->steps.size() ||
        (cand.steps.size() == out->steps.size() && cand.steps < out->steps)) {
      out = std::move(cand);
    }
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // smaller index stays root, so reps are deterministic
  }
};

}  // namespace

RestrictedSupport::RestrictedSupport(GroupSpec group, GroupElement g0,
                                     std::set<GroupElement> sigma)
    : group_(std::move(group)) {
  g0_ = group_.element(g0.coords);
  const GroupElement zero = group_.zero();
  const GroupElement minus_g0 = group_.neg(g0_);
  for (const GroupElement& g : sigma) {
    const GroupElement gc = group_.element(g.coords);
    if (gc == zero || gc == g0_ || gc == minus_g0) {
      throw ValidationError("/sigma", "restricted support must avoid {0, +-g0}, got " +
                                          gc.to_string());
    }
    sigma_.insert(gc);
    pm_sigma_.insert(gc);
    pm_sigma_.insert(group_.neg(gc));
  }
  std::set<GroupElement> shift_set{zero, g0_, minus_g0};
  shifts_.assign(shift_set.begin(), shift_set.end());
  std::set<GroupElement> steps(pm_sigma_);
  steps.insert(shift_set.begin(), shift_set.end());
  step_elements_.assign(steps.begin(), steps.end());
}

RestrictedSupport RestrictedSupport::of(const ColorAlgebra& algebra) {
  const GroupSpec& grp = algebra.group();
  const GroupElement zero = grp.zero();
  const GroupElement minus_g0 = grp.neg(algebra.g0());
  std::set<GroupElement> sigma;
  for (const auto& [degree, idx] : algebra.components()) {
    if (degree == zero || degree == algebra.g0() || degree == minus_g0) continue;
    sigma.insert(degree);
  }
  return RestrictedSupport(grp, algebra.g0(), std::move(sigma));
}

std::optional<Connection> find_connection(const RestrictedSupport& support,
                                          const GroupElement& g, const GroupElement& h) {
  const GroupElement gc = support.group().element(g.coords);
  const GroupElement hc = support.group().element(h.coords);
  if (!support.in_sigma(gc) || !support.in_sigma(hc)) {
    throw Error("find_connection endpoints must lie in Sigma");
  }
  return witness_from_paths(support.group(), shortest_paths(support, gc), hc);
}

bool verify_connection(const RestrictedSupport& support, const Connection& connection,
                       const GroupElement& g, const GroupElement& h) {
  const GroupSpec& grp = support.group();
  if (connection.steps.empty()) return false;
  if (connection.sign != 1 && connection.sign != -1) return false;
  GroupElement gc, hc;
  try {
    gc = grp.element(g.coords);
    hc = grp.element(h.coords);
  } catch (const SpecMismatch&) {
    return false;
  }
  if (!support.in_sigma(gc) || !support.in_sigma(hc)) return false;

  const std::vector<GroupElement>& shifts = support.shifts();
  const std::vector<GroupElement>& steps = support.step_elements();
  GroupElement running = grp.zero();
  for (std::size_t i = 0; i < connection.steps.size(); ++i) {
    GroupElement gi, ki;
    try {
      gi = grp.element(connection.steps[i].g.coords);
      ki = grp.element(connection.steps[i].k.coords);
    } catch (const SpecMismatch&) {
      return false;
    }
    if (i == 0) {
      if (gi != gc || ki != grp.zero()) return false;
    } else {
      if (std::find(steps.begin(), steps.end(), gi) == steps.end()) return false;
      if (std::find(shifts.begin(), shifts.end(), ki) == shifts.end()) return false;
    }
    running = grp.add(running, grp.add(gi, ki));
    const bool last = i + 1 == connection.steps.size();
    if (!last && !support.in_pm_sigma(running)) return false;
  }
  return running == grp.scale(connection.sign, hc);
}

int SupportPartition::class_index_of(const GroupElement& g) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::binary_search(classes[c].begin(), classes[c].end(), g)) {
      return static_cast<int>(c);
    }
  }
  return -1;
}

bool SupportPartition::same_class(const GroupElement& g, const GroupElement& h) const {
  const int cg = class_index_of(g);
  return cg >= 0 && cg == class_index_of(h);
}

SupportPartition equivalence_classes(const RestrictedSupport& support, Execution exec) {
  const std::vector<GroupElement> sigma(support.sigma().begin(), support.sigma().end());
  const int n = static_cast<int>(sigma.size());
  const GroupSpec& grp = support.group();

  // Per-source shortest-path witnesses toward every other Sigma element.
  std::vector<std::vector<std::optional<Connection>>> wit(
      n, std::vector<std::optional<Connection>>(n));
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
#endif
  for (int a = 0; a < n; ++a) {
    try {
      const auto paths = shortest_paths(support, sigma[a]);
      for (int b = 0; b < n; ++b) {
        wit[a][b] = witness_from_paths(grp, paths, sigma[b]);
      }
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (wit[a][b]) uf.unite(a, b);
    }
  }

  std::map<int, std::vector<GroupElement>> grouped;
  for (int i = 0; i < n; ++i) grouped[uf.find(i)].push_back(sigma[i]);

  SupportPartition out;
  for (auto& [root, members] : grouped) out.classes.push_back(std::move(members));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (uf.find(a) != uf.find(b)) continue;
      if (!wit[a][b]) {
        throw Error("internal: " + sigma[a].to_string() + " and " + sigma[b].to_string() +
                    " fell in one class without a direct witness");
      }
      out.witnesses.emplace(std::pair{sigma[a], sigma[b]}, *wit[a][b]);
    }
  }
  return out;
}

}  // namespace pcolor
