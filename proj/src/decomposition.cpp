#include "pcolor/decomposition.hpp"

#include <climits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcolor {

Subspace span_of_products(const ColorAlgebra& algebra, BilinearOp op, const Subspace& u,
                          const Subspace& w) {
  std::vector<Vec> rows;
  rows.reserve(u.rows().size() * w.rows().size());
  for (const Vec& a : u.rows()) {
    for (const Vec& b : w.rows()) {
      Element r = op == BilinearOp::bracket ? algebra.bracket(Element{a}, Element{b})
                                            : algebra.product(Element{a}, Element{b});
      if (!r.is_zero()) rows.push_back(std::move(r.coords));
    }
  }
  return Subspace::span(algebra.field(), algebra.global_ambient(), std::move(rows));
}

bool are_orthogonal(const ColorAlgebra& algebra, const Subspace& u, const Subspace& w) {
  return span_of_products(algebra, BilinearOp::bracket, u, w).is_zero() &&
         span_of_products(algebra, BilinearOp::bracket, w, u).is_zero() &&
         span_of_products(algebra, BilinearOp::product, u, w).is_zero() &&
         span_of_products(algebra, BilinearOp::product, w, u).is_zero();
}

Subspace ideal_generated_by(const ColorAlgebra& algebra, const Element& x) {
  Subspace ideal = Subspace::span(algebra.field(), algebra.global_ambient(), {x.coords});
  std::vector<Vec> work = ideal.rows();
  while (!work.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : work) {
      const Element ev{v};
      for (int j = 0; j < algebra.dim(); ++j) {
        const Element ej = algebra.basis_element(j);
        for (const Element& r : {algebra.bracket(ev, ej), algebra.bracket(ej, ev),
                                 algebra.product(ev, ej), algebra.product(ej, ev)}) {
          if (r.is_zero() || ideal.contains(r.coords)) continue;
          ideal = ideal.sum(
              Subspace::span(algebra.field(), algebra.global_ambient(), {r.coords}));
          next.push_back(r.coords);
        }
      }
    }
    work = std::move(next);
  }
  return ideal;
}

Subspace compute_p_alpha(const ColorAlgebra& algebra, const RestrictedSupport& support,
                         const std::vector<GroupElement>& class_elements,
                         const GroupElement& alpha) {
  const GroupSpec& grp = algebra.group();
  const GroupElement minus_g0 = grp.neg(algebra.g0());
  Subspace piece = algebra.component_zero(alpha);
  for (const GroupElement& h : class_elements) {
    const GroupElement p = grp.sub(alpha, grp.add(h, algebra.g0()));
    if (!support.in_sigma(p)) continue;
    piece = piece.sum(product_of_subspaces(algebra, BilinearOp::bracket,
                                           algebra.component_full(h),
                                           algebra.component_full(p)));
  }
  for (const GroupElement& k : class_elements) {
    const GroupElement q = grp.sub(alpha, k);
    if (!support.in_sigma(q) && q != minus_g0) continue;
    piece = piece.sum(product_of_subspaces(algebra, BilinearOp::product,
                                           algebra.component_full(k),
                                           algebra.component_full(q)));
  }
  return piece;
}

IdealDescriptor compute_ideal(const ColorAlgebra& algebra, const RestrictedSupport& support,
                              const std::vector<GroupElement>& class_elements) {
  IdealDescriptor d(algebra.global_zero());
  d.class_elements = class_elements;
  for (const GroupElement& alpha : support.shifts()) {
    Subspace piece = compute_p_alpha(algebra, support, class_elements, alpha);
    if (!piece.is_zero()) d.pieces.emplace(alpha, piece);
    d.p_alpha.emplace(alpha, std::move(piece));
  }
  for (const GroupElement& h : class_elements) {
    d.pieces.emplace(h, algebra.component_full(h));
  }
  for (const auto& [deg, piece] : d.pieces) {
    d.total = d.total.sum(algebra.embed_in_global(piece));
  }
  d.is_subalgebra =
      d.total.contains(span_of_products(algebra, BilinearOp::bracket, d.total, d.total)) &&
      d.total.contains(span_of_products(algebra, BilinearOp::product, d.total, d.total));
  const Subspace full = algebra.global_full();
  d.is_ideal =
      d.is_subalgebra &&
      d.total.contains(span_of_products(algebra, BilinearOp::bracket, d.total, full)) &&
      d.total.contains(span_of_products(algebra, BilinearOp::bracket, full, d.total)) &&
      d.total.contains(span_of_products(algebra, BilinearOp::product, d.total, full)) &&
      d.total.contains(span_of_products(algebra, BilinearOp::product, full, d.total));
  return d;
}

DecompositionReport decompose(const ColorAlgebra& algebra, Execution exec) {
  const RestrictedSupport support = RestrictedSupport::of(algebra);
  DecompositionReport r;
  r.partition = equivalence_classes(support, exec);
  for (const auto& cls : r.partition.classes) {
    r.ideals.push_back(compute_ideal(algebra, support, cls));
  }

  Subspace assembled = algebra.global_zero();
  int dim_total = 0;
  for (const IdealDescriptor& ideal : r.ideals) {
    assembled = assembled.sum(ideal.total);
    dim_total += ideal.total.dim();
  }
  for (const GroupElement& alpha : support.shifts()) {
    Subspace inner = algebra.component_zero(alpha);
    for (const IdealDescriptor& ideal : r.ideals) inner = inner.sum(ideal.p_alpha.at(alpha));
    Subspace residual = inner.canonical_complement();
    r.residual_dim += residual.dim();
    dim_total += residual.dim();
    assembled = assembled.sum(algebra.embed_in_global(residual));
    r.residual.emplace(alpha, std::move(residual));
  }
  r.sums_to_p = assembled == algebra.global_full();
  r.is_direct = r.sums_to_p && dim_total == algebra.dim();
  r.pairwise_orthogonal = true;
  for (std::size_t i = 0; i < r.ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < r.ideals.size(); ++j) {
      r.pairwise_orthogonal = r.pairwise_orthogonal &&
                              are_orthogonal(algebra, r.ideals[i].total, r.ideals[j].total);
    }
  }
  return r;
}

bool HypothesisReport::all() const {
  bool t = two_torsion_free.holds && centerless.holds && maximal_length.holds &&
           symmetric_support.holds && sigma_multiplicative.holds;
  for (const auto& [beta, tight] : tight_at) t = t && tight;
  return t;
}

std::vector<std::string> HypothesisReport::failures() const {
  std::vector<std::string> out;
  const auto note = [&](const PredicateResult& p, const std::string& what) {
    if (!p.holds) out.push_back(what + (p.detail.empty() ? "" : ": " + p.detail));
  };
  note(two_torsion_free, "grading group has 2-torsion");
  note(centerless, "center is nonzero");
  note(maximal_length, "not of maximal length");
  note(symmetric_support, "restricted support is not symmetric");
  note(sigma_multiplicative, "not Sigma-multiplicative");
  for (const auto& [beta, tight] : tight_at) {
    if (!tight) out.push_back("not tight at " + beta.to_string());
  }
  return out;
}

HypothesisReport check_simplicity_hypotheses(const ColorAlgebra& algebra) {
  const GroupSpec& grp = algebra.group();
  HypothesisReport rep;
  if (!grp.free_of_2_torsion()) {
    rep.two_torsion_free = {false, "a torsion order is even"};
  }
  const Subspace center = compute_center(algebra);
  if (!center.is_zero()) {
    rep.centerless = {false, "dim " + std::to_string(center.dim())};
  }
  rep.maximal_length = is_maximal_length(algebra);
  rep.symmetric_support = is_symmetric_support(algebra);
  rep.sigma_multiplicative = is_sigma_multiplicative(algebra);
  std::set<GroupElement> betas;
  for (int m : {0, 1, -1, 2, -2, -3}) betas.insert(grp.scale(m, algebra.g0()));
  for (const GroupElement& beta : betas) {
    rep.tight_at.emplace(beta, is_tight(algebra, beta).tight);
  }
  return rep;
}

SimplicityResult is_simple_criterion(const ColorAlgebra& algebra, bool assume_hypotheses,
                                     Execution exec) {
  SimplicityResult r;
  r.method = "criterion";
  r.bracket_nonzero = !algebra.bracket_constants().empty();
  r.product_nonzero = !algebra.product_constants().empty();
  const HypothesisReport hyp = check_simplicity_hypotheses(algebra);
  r.failed_hypotheses = hyp.failures();
  r.applicable = assume_hypotheses || hyp.all();
  const RestrictedSupport support = RestrictedSupport::of(algebra);
  const SupportPartition partition = equivalence_classes(support, exec);
  r.sigma_connected = partition.classes.size() == 1;
  r.simple =
      r.applicable && r.sigma_connected && r.bracket_nonzero && r.product_nonzero;
  if (!r.applicable) {
    r.detail = "criterion not applicable, " + std::to_string(r.failed_hypotheses.size()) +
               " hypothesis failure(s)";
  } else if (assume_hypotheses && !r.failed_hypotheses.empty()) {
    r.detail = "hypotheses assumed despite " +
               std::to_string(r.failed_hypotheses.size()) + " failure(s)";
  } else if (!r.sigma_connected) {
    r.detail = "restricted support splits into " +
               std::to_string(partition.classes.size()) + " connection classes";
  } else if (!r.bracket_nonzero || !r.product_nonzero) {
    r.detail = "an operation is identically zero";
  }
  return r;
}

namespace {

// Homogeneous candidates up to scaling: per component, every coordinate
// vector whose first nonzero entry is 1, in (degree, lead, odometer) order.
std::vector<Element> oracle_candidates(const ColorAlgebra& algebra) {
  const std::uint64_t p = algebra.field().characteristic();
  std::uint64_t count = 0;
  for (const auto& [deg, indices] : algebra.components()) {
    std::uint64_t per = 1;  // (p^d - 1) / (p - 1) via the lead decomposition
    for (std::size_t t = 1; t < indices.size(); ++t) {
      per = per * p + 1;
      if (per > (1u << 20)) throw Error("too many oracle candidates");
    }
    count += per;
    if (count > (1u << 20)) throw Error("too many oracle candidates");
  }
  std::vector<Element> out;
  out.reserve(count);
  for (const auto& [deg, indices] : algebra.components()) {
    const int d = static_cast<int>(indices.size());
    for (int lead = 0; lead < d; ++lead) {
      std::vector<std::uint64_t> tail(d - 1 - lead, 0);
      while (true) {
        Element x = algebra.zero_element();
        x.coords[indices[lead]] = Scalar::one(algebra.field());
        for (std::size_t t = 0; t < tail.size(); ++t) {
          x.coords[indices[lead + 1 + t]] =
              Scalar::from_integer(algebra.field(), static_cast<long long>(tail[t]));
        }
        out.push_back(std::move(x));
        std::size_t carry = tail.size();
        while (carry > 0 && tail[carry - 1] == p - 1) tail[--carry] = 0;
        if (carry == 0) break;
        ++tail[carry - 1];
      }
    }
  }
  return out;
}

}  // namespace

SimplicityResult is_simple_oracle(const ColorAlgebra& algebra, Execution exec) {
  SimplicityResult r;
  r.method = "oracle";
  r.bracket_nonzero = !algebra.bracket_constants().empty();
  r.product_nonzero = !algebra.product_constants().empty();
  if (!algebra.field().is_prime_field()) {
    r.detail = "oracle requires a prime field";
    return r;
  }
  r.applicable = true;
  const RestrictedSupport support = RestrictedSupport::of(algebra);
  r.sigma_connected = equivalence_classes(support, exec).classes.size() == 1;
  if (!r.bracket_nonzero || !r.product_nonzero) {
    r.detail = "an operation is identically zero";
    return r;
  }

  const std::vector<Element> candidates = oracle_candidates(algebra);
  const Subspace full = algebra.global_full();
  long first_bad = LONG_MAX;
  std::exception_ptr failure;
  if (exec == Execution::serial) {
    for (long m = 0; m < static_cast<long>(candidates.size()); ++m) {
      if (ideal_generated_by(algebra, candidates[m]) != full) {
        first_bad = m;
        break;
      }
    }
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad)
#endif
    for (long m = 0; m < static_cast<long>(candidates.size()); ++m) {
      try {
        if (ideal_generated_by(algebra, candidates[m]) != full) {
          first_bad = std::min(first_bad, m);
        }
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pcolor_oracle_failure)
#endif
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  if (first_bad == LONG_MAX) {
    r.simple = true;
  } else {
    r.witness = candidates[first_bad];
    r.detail = "a homogeneous element generates a proper ideal";
  }
  return r;
}

ColorAlgebra extract_component(const ColorAlgebra& algebra, const IdealDescriptor& ideal) {
  std::vector<BasisVector> basis;
  std::vector<Element> embedded;
  std::map<GroupElement, int> first_index;
  std::set<std::string> used;
  int synth = 0;
  for (const auto& [deg, piece] : ideal.pieces) {
    first_index[deg] = static_cast<int>(basis.size());
    const std::vector<int>& indices = algebra.components().at(deg);
    for (const Vec& row : piece.rows()) {
      std::string name;
      int unit_at = -1;
      for (std::size_t t = 0; t < row.size(); ++t) {
        if (row[t].is_zero()) continue;
        if (unit_at == -1 && row[t].is_one()) {
          unit_at = static_cast<int>(t);
        } else {
          unit_at = -2;
          break;
        }
      }
      if (unit_at >= 0) name = algebra.basis()[indices[unit_at]].name;
      while (name.empty() || used.count(name)) name = "w" + std::to_string(synth++);
      used.insert(name);
      basis.push_back({name, deg});
      embedded.push_back(Element{algebra.embed_row(deg, row)});
    }
  }

  const auto express = [&](const Element& v) {
    const std::optional<GroupElement> deg = algebra.homogeneous_degree(v);
    if (!deg) throw Error("ideal extraction: inhomogeneous structure constant");
    auto it = ideal.pieces.find(*deg);
    if (it == ideal.pieces.end()) throw Error("ideal extraction: piece is not closed");
    const std::optional<Vec> coords =
        it->second.coordinates_of(algebra.restrict_to_component(*deg, v.coords));
    if (!coords) throw Error("ideal extraction: piece is not closed");
    std::vector<std::pair<int, Scalar>> entries;
    for (std::size_t t = 0; t < coords->size(); ++t) {
      if (!(*coords)[t].is_zero()) {
        entries.emplace_back(first_index.at(*deg) + static_cast<int>(t), (*coords)[t]);
      }
    }
    return entries;
  };

  SCMap brk, prod;
  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Element b = algebra.bracket(embedded[i], embedded[j]);
      if (!b.is_zero()) brk[{i, j}] = express(b);
      const Element q = algebra.product(embedded[i], embedded[j]);
      if (!q.is_zero()) prod[{i, j}] = express(q);
    }
  }
  return ColorAlgebra::create(algebra.group(), algebra.field(), algebra.epsilon(),
                              algebra.g0(), basis, brk, prod);
}

MinimalDecomposition minimal_ideal_decomposition(const ColorAlgebra& algebra,
                                                 Execution exec) {
  MinimalDecomposition md{decompose(algebra, exec), {}};
  md.components.reserve(md.report.ideals.size());
  for (const IdealDescriptor& ideal : md.report.ideals) {
    md.components.push_back(extract_component(algebra, ideal));
  }
  return md;
}

}  // namespace pcolor
