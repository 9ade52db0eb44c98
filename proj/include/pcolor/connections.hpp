#pragma once

#include <map>
#include <set>
#include <vector>

#include "pcolor/algebra.hpp"

namespace pcolor {

/// Whether a kernel runs its plain serial reference implementation or the
/// OpenMP one.  Both produce identical results; tests assert it.
enum class Execution { serial, parallel };

/// One link of a connection chain: the support increment g and the bracket
/// shift k in {0, +-g0}.
struct ConnectionStep {
  GroupElement g;
  GroupElement k;

  auto operator<=>(const ConnectionStep&) const = default;
};

/// A connection from g to h: steps (g_1, 0), (g_2, k_2), ..., (g_n, k_n)
/// with g_1 = g, every g_i in +-Sigma ∪ {0, +-g0}, every proper partial sum
/// sum_{i<=j} (g_i + k_i) in +-Sigma, and total sum equal to sign * h.
struct Connection {
  std::vector<ConnectionStep> steps;
  int sign = +1;

  auto operator<=>(const Connection&) const = default;
};

/// The restricted support Sigma = {g : P_g != 0} \ {0, +-g0}, plus the
/// derived step sets used by the chain conditions.
class RestrictedSupport {
public:
  /// Throws ValidationError if sigma meets {0, +-g0} or coordinates do not
  /// match the group.
  RestrictedSupport(GroupSpec group, GroupElement g0, std::set<GroupElement> sigma);

  static RestrictedSupport of(const ColorAlgebra& algebra);

  const GroupSpec& group() const { return group_; }
  const GroupElement& g0() const { return g0_; }
  const std::set<GroupElement>& sigma() const { return sigma_; }
  const std::set<GroupElement>& pm_sigma() const { return pm_sigma_; }

  /// {0, g0, -g0} as a deduplicated sorted set.
  const std::vector<GroupElement>& shifts() const { return shifts_; }

  /// +-Sigma ∪ {0, +-g0}, sorted: the legal step increments g_i.
  const std::vector<GroupElement>& step_elements() const { return step_elements_; }

  bool in_sigma(const GroupElement& g) const { return sigma_.count(g) > 0; }
  bool in_pm_sigma(const GroupElement& g) const { return pm_sigma_.count(g) > 0; }

private:
  GroupSpec group_;
  GroupElement g0_;
  std::set<GroupElement> sigma_;
  std::set<GroupElement> pm_sigma_;
  std::vector<GroupElement> shifts_;
  std::vector<GroupElement> step_elements_;
};

/// Shortest connection from g to h (fewest steps, ties broken by
/// lexicographic comparison of the step sequences' canonical coordinates);
/// nullopt when no connection exists.  Throws Error unless g, h in Sigma.
std::optional<Connection> find_connection(const RestrictedSupport& support,
                                          const GroupElement& g, const GroupElement& h);

/// Replays the chain conditions; false on any violation (never throws).
bool verify_connection(const RestrictedSupport& support, const Connection& connection,
                       const GroupElement& g, const GroupElement& h);

/// The partition of Sigma into connection-equivalence classes.
struct SupportPartition {
  /// Disjoint classes, each sorted, ordered by smallest element.
  std::vector<std::vector<GroupElement>> classes;

  /// A verified witness for every ordered pair of one class.
  std::map<std::pair<GroupElement, GroupElement>, Connection> witnesses;

  int class_index_of(const GroupElement& g) const;  ///< -1 when g is in no class
  bool same_class(const GroupElement& g, const GroupElement& h) const;
};

SupportPartition equivalence_classes(const RestrictedSupport& support,
                                     Execution exec = Execution::parallel);

}  // namespace pcolor
