#include "pcolor/algebra.hpp"

#include <algorithm>
#include <set>

namespace pcolor {

namespace {

std::string sc_path(const char* which, int i, int j) {
  return std::string("/") + which + "/(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Sorts each output list by target index, rejects duplicate targets and
// out-of-range indices, drops zero coefficients and empty entries.
void normalize_constants(const char* which, SCMap& sc, int dim, const FieldSpec& field) {
  for (auto it = sc.begin(); it != sc.end();) {
    const auto [i, j] = it->first;
    if (i < 0 || i >= dim || j < 0 || j >= dim) {
      throw ValidationError(sc_path(which, i, j), "basis index out of range");
    }
    auto& out = it->second;
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t t = 0; t < out.size(); ++t) {
      if (out[t].first < 0 || out[t].first >= dim) {
        throw ValidationError(sc_path(which, i, j), "output index out of range");
      }
      if (t > 0 && out[t].first == out[t - 1].first) {
        throw ValidationError(sc_path(which, i, j),
                              "duplicate output index " + std::to_string(out[t].first));
      }
      if (out[t].second.field() != field) {
        throw ValidationError(sc_path(which, i, j), "coefficient field mismatch");
      }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    if (out.empty()) {
      it = sc.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

ColorAlgebra::ColorAlgebra(GroupSpec group, FieldSpec field, Bicharacter epsilon,
                           GroupElement g0, std::vector<BasisVector> basis, SCMap bracket,
                           SCMap product)
    : group_(std::move(group)),
      field_(field),
      epsilon_(std::move(epsilon)),
      g0_(std::move(g0)),
      basis_(std::move(basis)),
      bracket_(std::move(bracket)),
      product_(std::move(product)) {
  for (int i = 0; i < dim(); ++i) components_[basis_[i].degree].push_back(i);
}

ColorAlgebra ColorAlgebra::build(GroupSpec group, FieldSpec field, Bicharacter epsilon,
                                 GroupElement g0, std::vector<BasisVector> basis, SCMap bracket,
                                 SCMap product, bool enforce_grading) {
  if (field.is_prime_field() && field.p == 2) {
    throw ValidationError("/field", "characteristic 2 is not supported");
  }
  if (epsilon.group() != group) {
    throw ValidationError("/bicharacter", "bicharacter group differs from grading group");
  }
  if (epsilon.field() != field) {
    throw ValidationError("/bicharacter", "bicharacter field differs from scalar field");
  }
  if (basis.empty()) {
    throw ValidationError("/basis", "basis must not be empty");
  }
  g0 = group.element(g0.coords);
  std::set<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string path = "/basis/" + std::to_string(i);
    if (basis[i].name.empty()) throw ValidationError(path + "/name", "empty name");
    if (!names.insert(basis[i].name).second) {
      throw ValidationError(path + "/name", "duplicate name '" + basis[i].name + "'");
    }
    try {
      basis[i].degree = group.element(basis[i].degree.coords);
    } catch (const SpecMismatch& e) {
      throw ValidationError(path + "/degree", e.what());
    }
  }
  const int n = static_cast<int>(basis.size());
  normalize_constants("bracket", bracket, n, field);
  normalize_constants("product", product, n, field);
  if (enforce_grading) {
    for (const auto& [key, out] : bracket) {
      const GroupElement want =
          group.add(group.add(basis[key.first].degree, basis[key.second].degree), g0);
      for (const auto& [k, c] : out) {
        if (basis[k].degree != want) {
          throw ValidationError(sc_path("bracket", key.first, key.second),
                                "output " + std::to_string(k) + " has degree " +
                                    basis[k].degree.to_string() + ", grading requires " +
                                    want.to_string());
        }
      }
    }
    for (const auto& [key, out] : product) {
      const GroupElement want = group.add(basis[key.first].degree, basis[key.second].degree);
      for (const auto& [k, c] : out) {
        if (basis[k].degree != want) {
          throw ValidationError(sc_path("product", key.first, key.second),
                                "output " + std::to_string(k) + " has degree " +
                                    basis[k].degree.to_string() + ", grading requires " +
                                    want.to_string());
        }
      }
    }
  }
  return ColorAlgebra(std::move(group), field, std::move(epsilon), std::move(g0),
                      std::move(basis), std::move(bracket), std::move(product));
}

ColorAlgebra ColorAlgebra::create(GroupSpec group, FieldSpec field, Bicharacter epsilon,
                                  GroupElement g0, std::vector<BasisVector> basis,
                                  SCMap bracket, SCMap product) {
  return build(std::move(group), field, std::move(epsilon), std::move(g0), std::move(basis),
               std::move(bracket), std::move(product), /*enforce_grading=*/true);
}

ColorAlgebra ColorAlgebra::create_unchecked(GroupSpec group, FieldSpec field,
                                            Bicharacter epsilon, GroupElement g0,
                                            std::vector<BasisVector> basis, SCMap bracket,
                                            SCMap product) {
  return build(std::move(group), field, std::move(epsilon), std::move(g0), std::move(basis),
               std::move(bracket), std::move(product), /*enforce_grading=*/false);
}

int ColorAlgebra::component_dim(const GroupElement& g) const {
  auto it = components_.find(group_.element(g.coords));
  return it == components_.end() ? 0 : static_cast<int>(it->second.size());
}

Element ColorAlgebra::zero_element() const { return Element{vec_zero(field_, dim())}; }

Element ColorAlgebra::basis_element(int i) const {
  Element e = zero_element();
  e.coords[i] = Scalar::one(field_);
  return e;
}

Element ColorAlgebra::scaled(const Element& x, const Scalar& c) const {
  return Element{vec_scaled(x.coords, c)};
}

Element ColorAlgebra::sum(const Element& x, const Element& y) const {
  return Element{vec_sum(x.coords, y.coords)};
}

Element ColorAlgebra::eval(const SCMap& sc, const Element& x, const Element& y) const {
  Element r = zero_element();
  std::vector<int> xs, ys;
  for (int i = 0; i < dim(); ++i) {
    if (!x.coords[i].is_zero()) xs.push_back(i);
  }
  for (int j = 0; j < dim(); ++j) {
    if (!y.coords[j].is_zero()) ys.push_back(j);
  }
  if (xs.size() * ys.size() < sc.size()) {
    for (int i : xs) {
      for (int j : ys) {
        auto it = sc.find({i, j});
        if (it == sc.end()) continue;
        const Scalar cxy = x.coords[i] * y.coords[j];
        for (const auto& [k, c] : it->second) r.coords[k] += cxy * c;
      }
    }
    return r;
  }
  for (const auto& [key, out] : sc) {
    const Scalar& cx = x.coords[key.first];
    if (cx.is_zero()) continue;
    const Scalar& cy = y.coords[key.second];
    if (cy.is_zero()) continue;
    const Scalar cxy = cx * cy;
    for (const auto& [k, c] : out) r.coords[k] += cxy * c;
  }
  return r;
}

Element ColorAlgebra::bracket(const Element& x, const Element& y) const {
  return eval(bracket_, x, y);
}

Element ColorAlgebra::product(const Element& x, const Element& y) const {
  return eval(product_, x, y);
}

std::optional<GroupElement> ColorAlgebra::homogeneous_degree(const Element& x) const {
  std::optional<GroupElement> deg;
  for (int i = 0; i < dim(); ++i) {
    if (x.coords[i].is_zero()) continue;
    if (!deg) {
      deg = basis_[i].degree;
    } else if (*deg != basis_[i].degree) {
      return std::nullopt;
    }
  }
  return deg;
}

Ambient ColorAlgebra::component_ambient(const GroupElement& g) const {
  const GroupElement gc = group_.element(g.coords);
  return Ambient::component(gc, component_dim(gc));
}

Subspace ColorAlgebra::component_full(const GroupElement& g) const {
  return Subspace::full(field_, component_ambient(g));
}

Subspace ColorAlgebra::component_zero(const GroupElement& g) const {
  return Subspace::zero(field_, component_ambient(g));
}

Subspace ColorAlgebra::global_zero() const { return Subspace::zero(field_, global_ambient()); }

Subspace ColorAlgebra::global_full() const { return Subspace::full(field_, global_ambient()); }

Vec ColorAlgebra::embed_row(const GroupElement& g, const Vec& local) const {
  const GroupElement gc = group_.element(g.coords);
  auto it = components_.find(gc);
  const std::vector<int> empty;
  const std::vector<int>& idx = it == components_.end() ? empty : it->second;
  if (local.size() != idx.size()) {
    throw AmbientMismatch("component row length " + std::to_string(local.size()) +
                          " does not match dim P_" + gc.to_string());
  }
  Vec out = vec_zero(field_, dim());
  for (std::size_t t = 0; t < idx.size(); ++t) out[idx[t]] = local[t];
  return out;
}

Vec ColorAlgebra::restrict_to_component(const GroupElement& g, const Vec& global) const {
  const GroupElement gc = group_.element(g.coords);
  auto it = components_.find(gc);
  const std::vector<int> empty;
  const std::vector<int>& idx = it == components_.end() ? empty : it->second;
  Vec out = vec_zero(field_, static_cast<int>(idx.size()));
  std::vector<bool> mine(dim(), false);
  for (std::size_t t = 0; t < idx.size(); ++t) {
    mine[idx[t]] = true;
    out[t] = global[idx[t]];
  }
  for (int i = 0; i < dim(); ++i) {
    if (!mine[i] && !global[i].is_zero()) {
      throw AmbientMismatch("vector has support outside P_" + gc.to_string());
    }
  }
  return out;
}

Subspace ColorAlgebra::embed_in_global(const Subspace& component_subspace) const {
  const Ambient& a = component_subspace.ambient();
  if (a.kind != Ambient::Kind::component) {
    throw AmbientMismatch("embed_in_global expects a component subspace");
  }
  std::vector<Vec> gens;
  gens.reserve(component_subspace.dim());
  for (const Vec& r : component_subspace.rows()) gens.push_back(embed_row(a.degree, r));
  return Subspace::span(field_, global_ambient(), std::move(gens));
}

std::optional<std::map<GroupElement, Subspace>> ColorAlgebra::split_by_degree(
    const Subspace& global) const {
  if (global.ambient().kind != Ambient::Kind::global) {
    throw AmbientMismatch("split_by_degree expects a global subspace");
  }
  std::map<GroupElement, std::vector<Vec>> by_degree;
  for (const Vec& row : global.rows()) {
    const auto deg = homogeneous_degree(Element{row});
    if (!deg) return std::nullopt;
    by_degree[*deg].push_back(restrict_to_component(*deg, row));
  }
  std::map<GroupElement, Subspace> out;
  for (auto& [deg, rows] : by_degree) {
    out.emplace(deg, Subspace::span(field_, component_ambient(deg), std::move(rows)));
  }
  return out;
}

Subspace product_of_subspaces(const ColorAlgebra& algebra, BilinearOp op, const Subspace& u,
                              const Subspace& w) {
  if (u.ambient().kind != Ambient::Kind::component ||
      w.ambient().kind != Ambient::Kind::component) {
    throw AmbientMismatch("product_of_subspaces expects component subspaces");
  }
  const GroupSpec& grp = algebra.group();
  GroupElement target = grp.add(u.ambient().degree, w.ambient().degree);
  if (op == BilinearOp::bracket) target = grp.add(target, algebra.g0());
  std::vector<Vec> gens;
  for (const Vec& ur : u.rows()) {
    const Element ue{algebra.embed_row(u.ambient().degree, ur)};
    for (const Vec& wr : w.rows()) {
      const Element we{algebra.embed_row(w.ambient().degree, wr)};
      const Element prod =
          op == BilinearOp::bracket ? algebra.bracket(ue, we) : algebra.product(ue, we);
      gens.push_back(algebra.restrict_to_component(target, prod.coords));
    }
  }
  return Subspace::span(algebra.field(), algebra.component_ambient(target), std::move(gens));
}

}  // namespace pcolor
