#include "pcolor/group.hpp"

namespace pcolor {

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

GroupSpec::GroupSpec(int free_rank, std::vector<std::int64_t> torsion)
    : free_rank(free_rank), torsion(std::move(torsion)) {
  if (free_rank < 0) throw ValidationError("/group/free_rank", "negative free rank");
  for (std::size_t i = 0; i < this->torsion.size(); ++i) {
    if (this->torsion[i] < 2) {
      throw ValidationError("/group/torsion/" + std::to_string(i),
                            "cyclic order must be >= 2");
    }
  }
}

bool GroupSpec::free_of_2_torsion() const {
  for (std::int64_t m : torsion) {
    if (m % 2 == 0) return false;
  }
  return true;
}

GroupElement GroupSpec::zero() const {
  return GroupElement{std::vector<std::int64_t>(generator_count(), 0)};
}

void GroupSpec::require_size(const GroupElement& a) const {
  if (static_cast<int>(a.coords.size()) != generator_count()) {
    throw SpecMismatch("group element has " + std::to_string(a.coords.size()) +
                       " coordinates, group has " + std::to_string(generator_count()) +
                       " generators");
  }
}

GroupElement GroupSpec::element(std::vector<std::int64_t> coords) const {
  GroupElement g{std::move(coords)};
  require_size(g);
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    std::int64_t m = torsion[i];
    std::int64_t& c = g.coords[free_rank + i];
    c %= m;
    if (c < 0) c += m;
  }
  return g;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  require_size(a);
  require_size(b);
  std::vector<std::int64_t> c(a.coords);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
  return element(std::move(c));
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  require_size(a);
  std::vector<std::int64_t> c(a.coords);
  for (std::int64_t& x : c) x = -x;
  return element(std::move(c));
}

GroupElement GroupSpec::scale(std::int64_t n, const GroupElement& a) const {
  require_size(a);
  std::vector<std::int64_t> c(a.coords);
  for (std::int64_t& x : c) x *= n;
  return element(std::move(c));
}

std::string GroupSpec::to_string() const {
  std::string s;
  if (free_rank > 0) s += "Z^" + std::to_string(free_rank);
  for (std::int64_t m : torsion) {
    if (!s.empty()) s += " x ";
    s += "Z_" + std::to_string(m);
  }
  return s.empty() ? "0" : s;
}

}  // namespace pcolor
