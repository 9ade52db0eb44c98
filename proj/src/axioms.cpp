#include "pcolor/axioms.hpp"

#include <array>
#include <climits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcolor {

namespace {

// Per-tuple law evaluation shared by the serial reference and the OpenMP
// kernel; the two differ only in iteration scheduling and result merging.
class LawEval {
public:
  explicit LawEval(const ColorAlgebra& algebra) : a_(algebra) {
    const int n = a_.dim();
    const GroupSpec& grp = a_.group();
    eps_plain_.resize(n, std::vector<Scalar>(n));
    eps_shift_.resize(n, std::vector<Scalar>(n));
    eps_mixed_.resize(n, std::vector<Scalar>(n));
    std::vector<GroupElement> shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = grp.add(a_.degree_of(i), a_.g0());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        eps_plain_[i][j] = a_.epsilon().eval(a_.degree_of(i), a_.degree_of(j));
        eps_shift_[i][j] = a_.epsilon().eval(shifted[i], shifted[j]);
        eps_mixed_[i][j] = a_.epsilon().eval(shifted[i], a_.degree_of(j));
      }
    }
  }

  std::optional<Counterexample> commutativity(int i, int j) const {
    const Element lhs = op(BilinearOp::product, i, j);
    const Element rhs = a_.scaled(op(BilinearOp::product, j, i), eps_plain_[i][j]);
    if (lhs == rhs) return std::nullopt;
    return fail({i, j}, lhs, rhs, "x*y != eps(|x|,|y|) y*x");
  }

  std::optional<Counterexample> anticommutativity(int i, int j) const {
    const Element lhs = op(BilinearOp::bracket, i, j);
    const Element rhs = a_.scaled(op(BilinearOp::bracket, j, i), -eps_shift_[i][j]);
    if (lhs == rhs) return std::nullopt;
    return fail({i, j}, lhs, rhs, "{x,y} != -eps(|x|+g0,|y|+g0) {y,x}");
  }

  std::optional<Counterexample> associativity(int i, int j, int k) const {
    const Element lhs = a_.product(op(BilinearOp::product, i, j), a_.basis_element(k));
    const Element rhs = a_.product(a_.basis_element(i), op(BilinearOp::product, j, k));
    if (lhs == rhs) return std::nullopt;
    return fail({i, j, k}, lhs, rhs, "(xy)z != x(yz)");
  }

  std::optional<Counterexample> jacobi(int i, int j, int k) const {
    const Element lhs = a_.bracket(a_.basis_element(i), op(BilinearOp::bracket, j, k));
    const Element rhs = a_.sum(
        a_.bracket(op(BilinearOp::bracket, i, j), a_.basis_element(k)),
        a_.scaled(a_.bracket(a_.basis_element(j), op(BilinearOp::bracket, i, k)),
                  eps_shift_[i][j]));
    if (lhs == rhs) return std::nullopt;
    return fail({i, j, k}, lhs, rhs,
                "{x,{y,z}} != {{x,y},z} + eps(|x|+g0,|y|+g0) {y,{x,z}}");
  }

  std::optional<Counterexample> leibniz(int i, int j, int k) const {
    const Element lhs = a_.bracket(a_.basis_element(i), op(BilinearOp::product, j, k));
    const Element rhs = a_.sum(
        a_.product(op(BilinearOp::bracket, i, j), a_.basis_element(k)),
        a_.scaled(a_.product(a_.basis_element(j), op(BilinearOp::bracket, i, k)),
                  eps_mixed_[i][j]));
    if (lhs == rhs) return std::nullopt;
    return fail({i, j, k}, lhs, rhs, "{x,yz} != {x,y}z + eps(|x|+g0,|y|) y{x,z}");
  }

private:
  Element op(BilinearOp which, int i, int j) const {
    const SCMap& sc =
        which == BilinearOp::bracket ? a_.bracket_constants() : a_.product_constants();
    Element r = a_.zero_element();
    auto it = sc.find({i, j});
    if (it != sc.end()) {
      for (const auto& [k, c] : it->second) r.coords[k] = c;
    }
    return r;
  }

  Counterexample fail(std::vector<int> idx, Element lhs, Element rhs,
                      const char* law) const {
    std::string names;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      names += (t ? ", " : "") + a_.basis()[idx[t]].name;
    }
    return Counterexample{std::move(idx), std::move(lhs), std::move(rhs),
                          std::string(law) + " at (" + names + ")"};
  }

  const ColorAlgebra& a_;
  std::vector<std::vector<Scalar>> eps_plain_;
  std::vector<std::vector<Scalar>> eps_shift_;
  std::vector<std::vector<Scalar>> eps_mixed_;
};

LawResult scan_grading(const ColorAlgebra& a, BilinearOp which) {
  const bool is_bracket = which == BilinearOp::bracket;
  const SCMap& sc = is_bracket ? a.bracket_constants() : a.product_constants();
  for (const auto& [key, out] : sc) {
    GroupElement want = a.group().add(a.degree_of(key.first), a.degree_of(key.second));
    if (is_bracket) want = a.group().add(want, a.g0());
    for (const auto& [k, c] : out) {
      if (a.degree_of(k) == want) continue;
      Counterexample cex;
      cex.indices = {key.first, key.second, k};
      cex.detail = std::string(is_bracket ? "bracket" : "product") + " entry (" +
                   std::to_string(key.first) + "," + std::to_string(key.second) +
                   ") targets index " + std::to_string(k) + " of degree " +
                   a.degree_of(k).to_string() + ", grading requires " + want.to_string();
      return LawResult{false, std::move(cex)};
    }
  }
  return LawResult{};
}

AxiomReport check_axioms_serial(const ColorAlgebra& a) {
  const LawEval ev(a);
  AxiomReport rep;
  rep.grading_bracket = scan_grading(a, BilinearOp::bracket);
  rep.grading_product = scan_grading(a, BilinearOp::product);
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rep.commutativity.pass) {
        if (auto c = ev.commutativity(i, j)) rep.commutativity = {false, std::move(c)};
      }
      if (rep.anticommutativity.pass) {
        if (auto c = ev.anticommutativity(i, j)) rep.anticommutativity = {false, std::move(c)};
      }
      for (int k = 0; k < n; ++k) {
        if (rep.associativity.pass) {
          if (auto c = ev.associativity(i, j, k)) rep.associativity = {false, std::move(c)};
        }
        if (rep.jacobi.pass) {
          if (auto c = ev.jacobi(i, j, k)) rep.jacobi = {false, std::move(c)};
        }
        if (rep.leibniz.pass) {
          if (auto c = ev.leibniz(i, j, k)) rep.leibniz = {false, std::move(c)};
        }
      }
    }
  }
  return rep;
}

// Slot order in the per-thread result arrays of the parallel kernel.
enum LawSlot { kComm, kAnti, kAssoc, kJacobi, kLeibniz, kSlots };

struct BestHit {
  long index = LONG_MAX;  // flattened tuple index; the smallest one wins
  Counterexample cex;
};

void consider(BestHit& best, long index, std::optional<Counterexample>&& cex) {
  if (cex && index < best.index) {
    best.index = index;
    best.cex = std::move(*cex);
  }
}

AxiomReport check_axioms_parallel(const ColorAlgebra& a) {
  const LawEval ev(a);
  AxiomReport rep;
  rep.grading_bracket = scan_grading(a, BilinearOp::bracket);
  rep.grading_product = scan_grading(a, BilinearOp::product);
  const long n = a.dim();
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::vector<std::array<BestHit, kSlots>> local(threads);
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
  {
#ifdef _OPENMP
    const int t = omp_get_thread_num();
#else
    const int t = 0;
#endif
    auto& mine = local[t];
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
    for (long m = 0; m < n * n; ++m) {
      try {
        const int i = static_cast<int>(m / n), j = static_cast<int>(m % n);
        consider(mine[kComm], m, ev.commutativity(i, j));
        consider(mine[kAnti], m, ev.anticommutativity(i, j));
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pcolor_axiom_failure)
#endif
        if (!failure) failure = std::current_exception();
      }
    }
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long m = 0; m < n * n * n; ++m) {
      try {
        const int i = static_cast<int>(m / (n * n));
        const int j = static_cast<int>(m / n % n);
        const int k = static_cast<int>(m % n);
        consider(mine[kAssoc], m, ev.associativity(i, j, k));
        consider(mine[kJacobi], m, ev.jacobi(i, j, k));
        consider(mine[kLeibniz], m, ev.leibniz(i, j, k));
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pcolor_axiom_failure)
#endif
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  const auto merged = [&](LawSlot slot) -> LawResult {
    BestHit best;
    for (const auto& th : local) {
      if (th[slot].index < best.index) best = th[slot];
    }
    if (best.index == LONG_MAX) return LawResult{};
    return LawResult{false, std::move(best.cex)};
  };
  rep.commutativity = merged(kComm);
  rep.anticommutativity = merged(kAnti);
  rep.associativity = merged(kAssoc);
  rep.jacobi = merged(kJacobi);
  rep.leibniz = merged(kLeibniz);
  return rep;
}

}  // namespace

AxiomReport check_axioms(const ColorAlgebra& algebra, Execution exec) {
  return exec == Execution::serial ? check_axioms_serial(algebra)
                                   : check_axioms_parallel(algebra);
}

Subspace compute_center(const ColorAlgebra& algebra) {
  const int n = algebra.dim();
  const FieldSpec& f = algebra.field();
  // Unknown v = sum_i x_i e_i; for every basis multiplier e_j, every output
  // coordinate of {v,e_j}, {e_j,v}, v e_j and e_j v gives one linear row.
  std::map<std::tuple<int, int, int>, Vec> rows;  // (which, j, out_k) -> row
  const auto add = [&](int which, int j, int k, int i, const Scalar& c) {
    auto [it, inserted] = rows.try_emplace(std::tuple{which, j, k}, vec_zero(f, n));
    it->second[i] += c;
  };
  for (const auto& [key, out] : algebra.bracket_constants()) {
    for (const auto& [k, c] : out) {
      add(0, key.second, k, key.first, c);  // {v, e_j}
      add(1, key.first, k, key.second, c);  // {e_j, v}
    }
  }
  for (const auto& [key, out] : algebra.product_constants()) {
    for (const auto& [k, c] : out) {
      add(2, key.second, k, key.first, c);  // v e_j
      add(3, key.first, k, key.second, c);  // e_j v
    }
  }
  std::vector<Vec> matrix;
  matrix.reserve(rows.size());
  for (auto& [idx, row] : rows) matrix.push_back(std::move(row));
  return Subspace::span(f, algebra.global_ambient(), nullspace(std::move(matrix), f, n));
}

PredicateResult is_maximal_length(const ColorAlgebra& algebra) {
  if (algebra.component_dim(algebra.group().zero()) == 0) {
    return {false, "P_0 = 0"};
  }
  const RestrictedSupport support = RestrictedSupport::of(algebra);
  for (const GroupElement& g : support.sigma()) {
    const int d = algebra.component_dim(g);
    if (d != 1) {
      return {false, "dim P_" + g.to_string() + " = " + std::to_string(d)};
    }
  }
  return {};
}

PredicateResult is_symmetric_support(const ColorAlgebra& algebra) {
  const RestrictedSupport support = RestrictedSupport::of(algebra);
  for (const GroupElement& g : support.sigma()) {
    if (!support.in_sigma(algebra.group().neg(g))) {
      return {false, g.to_string() + " in Sigma but -" + g.to_string() + " is not"};
    }
  }
  return {};
}

PredicateResult is_sigma_multiplicative(const ColorAlgebra& algebra) {
  const GroupSpec& grp = algebra.group();
  const RestrictedSupport support = RestrictedSupport::of(algebra);

  std::vector<GroupElement> hs(support.sigma().begin(), support.sigma().end());
  for (const GroupElement& s : support.shifts()) {
    if (algebra.component_dim(s) > 0) hs.push_back(s);
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  // Shift tokens in the stated clause order, deduplicated as group elements.
  std::vector<std::pair<GroupElement, int>> tokens;
  for (const auto& [val, kind] :
       {std::pair{grp.zero(), 0}, {algebra.g0(), 1}, {grp.neg(algebra.g0()), 2}}) {
    bool seen = false;
    for (const auto& [v, k] : tokens) seen = seen || v == val;
    if (!seen) tokens.emplace_back(val, kind);
  }

  const GroupElement minus_g0 = grp.neg(algebra.g0());
  for (const GroupElement& g : support.sigma()) {
    const Subspace pg = algebra.component_full(g);
    for (const GroupElement& h : hs) {
      const Subspace ph = algebra.component_full(h);
      for (const auto& [kval, kind] : tokens) {
        if (!support.in_sigma(grp.add(grp.add(g, h), kval))) continue;
        bool ok = true;
        const char* what = "";
        if (kind == 0) {
          ok = !product_of_subspaces(algebra, BilinearOp::product, pg, ph).is_zero();
          what = "P_g P_h = 0";
        } else if (kind == 1) {
          ok = !product_of_subspaces(algebra, BilinearOp::bracket, pg, ph).is_zero();
          what = "{P_g, P_h} = 0";
        } else {
          const Subspace pgh = product_of_subspaces(algebra, BilinearOp::product, pg, ph);
          ok = !product_of_subspaces(algebra, BilinearOp::product, pgh,
                                     algebra.component_full(minus_g0))
                    .is_zero();
          what = "(P_g P_h) P_{-g0} = 0";
        }
        if (!ok) {
          return {false, std::string(what) + " for g = " + g.to_string() +
                             ", h = " + h.to_string() + ", k = " + kval.to_string()};
        }
      }
    }
  }
  return {};
}

TightnessResult is_tight(const ColorAlgebra& algebra, const GroupElement& alpha) {
  const GroupSpec& grp = algebra.group();
  const GroupElement a = grp.element(alpha.coords);
  bool legal = false;
  for (int m = -3; m <= 3; ++m) legal = legal || a == grp.scale(m, algebra.g0());
  if (!legal) {
    throw Error("tightness is defined for alpha in {0, +-g0, +-2g0, +-3g0}, got " +
                a.to_string());
  }

  const RestrictedSupport support = RestrictedSupport::of(algebra);
  std::set<GroupElement> excluded;
  for (int m : {-3, -2, 2, 3}) excluded.insert(grp.scale(m, algebra.g0()));
  std::vector<GroupElement> allowed;
  for (const GroupElement& g : support.sigma()) {
    if (!excluded.count(g)) allowed.push_back(g);
  }

  Subspace witness = algebra.component_zero(a);
  for (const GroupElement& h : allowed) {
    const GroupElement p = grp.sub(a, grp.add(h, algebra.g0()));
    if (!std::binary_search(allowed.begin(), allowed.end(), p)) continue;
    witness = witness.sum(product_of_subspaces(algebra, BilinearOp::bracket,
                                               algebra.component_full(h),
                                               algebra.component_full(p)));
  }
  for (const GroupElement& k : allowed) {
    const GroupElement q = grp.sub(a, k);
    if (!std::binary_search(allowed.begin(), allowed.end(), q)) continue;
    witness = witness.sum(product_of_subspaces(algebra, BilinearOp::product,
                                               algebra.component_full(k),
                                               algebra.component_full(q)));
  }
  const bool tight = witness == algebra.component_full(a);
  return TightnessResult(tight, std::move(witness));
}

}  // namespace pcolor
