#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pcolor/errors.hpp"

namespace pcolor {

/// An element of a finitely generated abelian group, stored as one coordinate
/// per generator.  Plain comparable value; canonical form (torsion
/// coordinates reduced into [0, m_i)) is maintained by GroupSpec operations.
struct GroupElement {
  std::vector<std::int64_t> coords;

  auto operator<=>(const GroupElement&) const = default;

  std::string to_string() const;
};

/// G = Z^free_rank x Z_{m_1} x ... x Z_{m_k}, with the free generators first.
struct GroupSpec {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  ///< cyclic orders m_i, each >= 2

  GroupSpec() = default;
  GroupSpec(int free_rank, std::vector<std::int64_t> torsion);

  int generator_count() const { return free_rank + static_cast<int>(torsion.size()); }

  /// True iff no element of order 2 exists, i.e. every m_i is odd.
  bool free_of_2_torsion() const;

  bool operator==(const GroupSpec&) const = default;

  GroupElement zero() const;

  /// Reduces a coordinate tuple to canonical form.
  /// Throws SpecMismatch when the tuple length is not generator_count().
  GroupElement element(std::vector<std::int64_t> coords) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(std::int64_t n, const GroupElement& a) const;

  bool is_zero(const GroupElement& a) const { return a == zero(); }

  std::string to_string() const;

private:
  void require_size(const GroupElement& a) const;
};

}  // namespace pcolor
