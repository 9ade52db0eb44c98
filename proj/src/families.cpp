#include "pcolor/families.hpp"

#include <set>

namespace pcolor {

namespace {

// The odd line's basis and product; the bracket and the degree vary between
// the standalone example and the second block of the orthogonal sum.
ColorAlgebra odd_line_core(const FieldSpec& field, std::int64_t g0, bool with_bracket) {
  const GroupSpec grp(1, {});
  const Scalar one = Scalar::one(field);
  const Bicharacter eps =
      Bicharacter::create(grp, field, {{Scalar::from_integer(field, -1)}});
  const std::vector<BasisVector> basis = {{"1", grp.element({0})},
                                          {"xi", grp.element({1})}};
  SCMap prod, brk;
  prod[{0, 0}] = {{0, one}};
  prod[{0, 1}] = {{1, one}};
  prod[{1, 0}] = {{1, one}};
  if (with_bracket) brk[{1, 1}] = {{0, one}};
  return ColorAlgebra::create(grp, field, eps, grp.element({g0}), basis, brk, prod);
}

}  // namespace

ColorAlgebra odd_line(const FieldSpec& field) { return odd_line_core(field, -2, true); }

ColorAlgebra grassmann_plane(const FieldSpec& field) {
  const GroupSpec grp(0, {2});
  const Scalar one = Scalar::one(field);
  const Scalar minus = Scalar::from_integer(field, -1);
  const Bicharacter eps = Bicharacter::create(grp, field, {{minus}});
  const GroupElement even = grp.element({0}), odd = grp.element({1});
  const std::vector<BasisVector> basis = {
      {"1", even}, {"t1", odd}, {"t2", odd}, {"t12", even}};
  SCMap prod, brk;
  for (int j = 0; j < 4; ++j) {
    prod[{0, j}] = {{j, one}};
    if (j > 0) prod[{j, 0}] = {{j, one}};
  }
  prod[{1, 2}] = {{3, one}};
  prod[{2, 1}] = {{3, minus}};
  brk[{1, 1}] = {{0, one}};
  brk[{2, 2}] = {{0, one}};
  brk[{1, 3}] = {{2, one}};
  brk[{3, 1}] = {{2, minus}};
  brk[{2, 3}] = {{1, minus}};
  brk[{3, 2}] = {{1, one}};
  return ColorAlgebra::create(grp, field, eps, grp.zero(), basis, brk, prod);
}

ColorAlgebra zero_bracket_group_algebra(const GroupSpec& group, const GroupElement& g0,
                                        const FieldSpec& field) {
  if (group.free_rank != 0) {
    throw ValidationError("/group", "group algebra example requires a finite group");
  }
  std::vector<GroupElement> elements;
  std::vector<std::int64_t> digits(group.torsion.size(), 0);
  while (true) {
    elements.push_back(group.element(digits));
    std::size_t carry = digits.size();
    while (carry > 0 && digits[carry - 1] == group.torsion[carry - 1] - 1) {
      digits[--carry] = 0;
    }
    if (carry == 0) break;
    ++digits[carry - 1];
  }
  std::map<GroupElement, int> index;
  std::vector<BasisVector> basis;
  for (const GroupElement& g : elements) {
    index.emplace(g, static_cast<int>(basis.size()));
    basis.push_back({"e" + g.to_string(), g});
  }
  SCMap prod;
  const Scalar one = Scalar::one(field);
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    for (int j = 0; j < static_cast<int>(elements.size()); ++j) {
      prod[{i, j}] = {{index.at(group.add(elements[i], elements[j])), one}};
    }
  }
  return ColorAlgebra::create(group, field, Bicharacter::trivial(group, field), g0, basis,
                              {}, prod);
}

ColorAlgebra det_torus(std::uint64_t m, long long c, const std::vector<std::int64_t>& g0) {
  if (m < 3 || m % 2 == 0 || !is_prime_u64(m)) {
    throw ValidationError("/group", "det torus needs an odd prime modulus");
  }
  const long long mm = static_cast<long long>(m);
  if ((c % mm + mm) % mm == 0) {
    throw ValidationError("/bracket", "det torus needs c nonzero mod m");
  }
  const FieldSpec field = FieldSpec::prime_field(m);
  const GroupSpec grp(0, {mm, mm});
  const GroupElement degree = grp.element(g0);
  std::vector<BasisVector> basis;
  std::vector<GroupElement> elements;
  for (std::int64_t u1 = 0; u1 < mm; ++u1) {
    for (std::int64_t u2 = 0; u2 < mm; ++u2) {
      const GroupElement u = grp.element({u1, u2});
      elements.push_back(u);
      basis.push_back({"e" + u.to_string(), u});
    }
  }
  const auto index_of = [&](const GroupElement& g) {
    return static_cast<int>(g.coords[0] * mm + g.coords[1]);
  };
  SCMap prod, brk;
  const Scalar one = Scalar::one(field);
  const int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const GroupElement &u = elements[i], &v = elements[j];
      prod[{i, j}] = {{index_of(grp.add(u, v)), one}};
      const long long det =
          ((u.coords[0] * v.coords[1] - u.coords[1] * v.coords[0]) % mm + mm) % mm;
      const long long coeff = c % mm * det % mm;
      if (coeff % mm != 0) {
        brk[{i, j}] = {{index_of(grp.add(grp.add(u, v), degree)),
                        Scalar::from_integer(field, coeff)}};
      }
    }
  }
  return ColorAlgebra::create(grp, field, Bicharacter::trivial(grp, field), degree, basis,
                              brk, prod);
}

ColorAlgebra direct_sum(const ColorAlgebra& a, const ColorAlgebra& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("direct sum requires both summands over one field");
  }
  const FieldSpec& field = a.field();
  const GroupSpec &ga = a.group(), &gb = b.group();
  std::vector<std::int64_t> torsion = ga.torsion;
  torsion.insert(torsion.end(), gb.torsion.begin(), gb.torsion.end());
  const GroupSpec grp(ga.free_rank + gb.free_rank, torsion);

  const int fa = ga.free_rank, fb = gb.free_rank;
  const int ta = static_cast<int>(ga.torsion.size());
  const auto embed_a = [&](const GroupElement& g) {
    std::vector<std::int64_t> coords(grp.generator_count(), 0);
    for (int i = 0; i < fa; ++i) coords[i] = g.coords[i];
    for (int i = 0; i < ta; ++i) coords[fa + fb + i] = g.coords[fa + i];
    return grp.element(std::move(coords));
  };
  const auto embed_b = [&](const GroupElement& g) {
    std::vector<std::int64_t> coords(grp.generator_count(), 0);
    for (int i = 0; i < fb; ++i) coords[fa + i] = g.coords[i];
    for (std::size_t i = 0; i < gb.torsion.size(); ++i) {
      coords[fa + fb + ta + i] = g.coords[fb + i];
    }
    return grp.element(std::move(coords));
  };
  const auto gen_a = [&](int i) { return i < fa ? i : fa + fb + (i - fa); };
  const auto gen_b = [&](int i) { return i < fb ? fa + i : fa + fb + ta + (i - fb); };

  const int gens = grp.generator_count();
  Bicharacter::Matrix values(gens, std::vector<Scalar>(gens, Scalar::one(field)));
  for (int i = 0; i < ga.generator_count(); ++i) {
    for (int j = 0; j < ga.generator_count(); ++j) {
      values[gen_a(i)][gen_a(j)] = a.epsilon().values()[i][j];
    }
  }
  for (int i = 0; i < gb.generator_count(); ++i) {
    for (int j = 0; j < gb.generator_count(); ++j) {
      values[gen_b(i)][gen_b(j)] = b.epsilon().values()[i][j];
    }
  }
  const Bicharacter eps = Bicharacter::create(grp, field, std::move(values));
  const GroupElement g0 = grp.add(embed_a(a.g0()), embed_b(b.g0()));

  std::vector<BasisVector> basis;
  std::set<std::string> used;
  for (const BasisVector& v : a.basis()) {
    used.insert(v.name);
    basis.push_back({v.name, embed_a(v.degree)});
  }
  for (const BasisVector& v : b.basis()) {
    std::string name = v.name;
    while (used.count(name)) name += "'";
    used.insert(name);
    basis.push_back({name, embed_b(v.degree)});
  }

  SCMap brk, prod;
  const int off = a.dim();
  for (const auto& [key, out] : a.bracket_constants()) brk[key] = out;
  for (const auto& [key, out] : a.product_constants()) prod[key] = out;
  const auto shift = [&](const std::vector<std::pair<int, Scalar>>& out) {
    std::vector<std::pair<int, Scalar>> r;
    for (const auto& [k, cf] : out) r.emplace_back(k + off, cf);
    return r;
  };
  for (const auto& [key, out] : b.bracket_constants()) {
    brk[{key.first + off, key.second + off}] = shift(out);
  }
  for (const auto& [key, out] : b.product_constants()) {
    prod[{key.first + off, key.second + off}] = shift(out);
  }
  return ColorAlgebra::create(grp, field, eps, g0, basis, brk, prod);
}

const std::vector<std::string>& builtin_example_names() {
  static const std::vector<std::string> names = {
      "odd-line", "orthogonal-sum", "zero-bracket-group-algebra", "color-regrade"};
  return names;
}

ColorAlgebra builtin_example(const std::string& name, const FieldSpec& field) {
  if (name == "odd-line") return odd_line(field);
  if (name == "orthogonal-sum") {
    return direct_sum(odd_line(field), odd_line_core(field, 0, false));
  }
  if (name == "zero-bracket-group-algebra") {
    const GroupSpec grp(0, {3});
    return zero_bracket_group_algebra(grp, grp.zero(), field);
  }
  if (name == "color-regrade") return grassmann_plane(field);
  throw UnknownExample("no bundled example named '" + name + "'");
}

}  // namespace pcolor
