#include "pcolor/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace pcolor {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kAxiomsSkipReason = "axiom check failed";

std::string format_element(const std::vector<std::string>& names, const Element& e) {
  std::string out;
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (e.coords[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += e.coords[i].str() + "*" + names[i];
  }
  return out.empty() ? "0" : out;
}

struct LawEntry {
  const char* name;
  const LawResult* result;
};

std::array<LawEntry, 7> law_entries(const AxiomReport& ax) {
  return {{{"grading-bracket", &ax.grading_bracket},
           {"grading-product", &ax.grading_product},
           {"commutativity", &ax.commutativity},
           {"anticommutativity", &ax.anticommutativity},
           {"associativity", &ax.associativity},
           {"jacobi", &ax.jacobi},
           {"leibniz", &ax.leibniz}}};
}

ordered_json degree_dim_json(const GroupElement& g, int dim, const char* key) {
  ordered_json o;
  o[key] = g.coords;
  o["dim"] = dim;
  return o;
}

ordered_json predicate_json(const PredicateResult& p) {
  ordered_json o;
  o["holds"] = p.holds;
  o["detail"] = p.detail;
  return o;
}

ordered_json axioms_json(const Report& r) {
  ordered_json o;
  o["pass"] = r.axioms.all_pass();
  ordered_json laws = ordered_json::array();
  for (const LawEntry& entry : law_entries(r.axioms)) {
    ordered_json law;
    law["law"] = entry.name;
    law["pass"] = entry.result->pass;
    if (entry.result->counterexample) {
      const Counterexample& cex = *entry.result->counterexample;
      ordered_json c;
      c["indices"] = cex.indices;
      if (!cex.lhs.coords.empty()) {
        c["lhs"] = format_element(r.basis_names, cex.lhs);
        c["rhs"] = format_element(r.basis_names, cex.rhs);
      }
      c["detail"] = cex.detail;
      law["counterexample"] = std::move(c);
    }
    laws.push_back(std::move(law));
  }
  o["laws"] = std::move(laws);
  return o;
}

ordered_json hypotheses_json(const HypothesisReport& hyp) {
  ordered_json o;
  o["all"] = hyp.all();
  o["two_torsion_free"] = predicate_json(hyp.two_torsion_free);
  o["centerless"] = predicate_json(hyp.centerless);
  o["maximal_length"] = predicate_json(hyp.maximal_length);
  o["symmetric_support"] = predicate_json(hyp.symmetric_support);
  o["sigma_multiplicative"] = predicate_json(hyp.sigma_multiplicative);
  ordered_json tight = ordered_json::array();
  for (const auto& [beta, holds] : hyp.tight_at) {
    ordered_json t;
    t["beta"] = beta.coords;
    t["holds"] = holds;
    tight.push_back(std::move(t));
  }
  o["tight_at"] = std::move(tight);
  return o;
}

ordered_json connection_json(const GroupElement& from, const GroupElement& to,
                             const Connection& c) {
  ordered_json o;
  o["from"] = from.coords;
  o["to"] = to.coords;
  o["sign"] = c.sign;
  ordered_json steps = ordered_json::array();
  for (const ConnectionStep& s : c.steps) {
    ordered_json step;
    step["g"] = s.g.coords;
    step["k"] = s.k.coords;
    steps.push_back(std::move(step));
  }
  o["steps"] = std::move(steps);
  return o;
}

ordered_json decomposition_json(const DecompositionReport& d) {
  ordered_json o;
  ordered_json classes = ordered_json::array();
  for (const auto& cls : d.partition.classes) {
    ordered_json one = ordered_json::array();
    for (const GroupElement& g : cls) one.push_back(g.coords);
    classes.push_back(std::move(one));
  }
  ordered_json witnesses = ordered_json::array();
  for (const auto& [pair, connection] : d.partition.witnesses) {
    witnesses.push_back(connection_json(pair.first, pair.second, connection));
  }
  ordered_json partition;
  partition["classes"] = std::move(classes);
  partition["witnesses"] = std::move(witnesses);
  o["partition"] = std::move(partition);

  ordered_json ideals = ordered_json::array();
  for (const IdealDescriptor& ideal : d.ideals) {
    ordered_json i;
    ordered_json cls = ordered_json::array();
    for (const GroupElement& g : ideal.class_elements) cls.push_back(g.coords);
    i["class"] = std::move(cls);
    i["dim"] = ideal.total.dim();
    ordered_json inner = ordered_json::array();
    for (const auto& [alpha, piece] : ideal.p_alpha) {
      inner.push_back(degree_dim_json(alpha, piece.dim(), "alpha"));
    }
    i["inner"] = std::move(inner);
    ordered_json pieces = ordered_json::array();
    for (const auto& [degree, piece] : ideal.pieces) {
      pieces.push_back(degree_dim_json(degree, piece.dim(), "degree"));
    }
    i["pieces"] = std::move(pieces);
    i["is_subalgebra"] = ideal.is_subalgebra;
    i["is_ideal"] = ideal.is_ideal;
    ideals.push_back(std::move(i));
  }
  o["ideals"] = std::move(ideals);

  ordered_json residual = ordered_json::array();
  for (const auto& [degree, piece] : d.residual) {
    residual.push_back(degree_dim_json(degree, piece.dim(), "degree"));
  }
  o["residual"] = std::move(residual);
  o["residual_dim"] = d.residual_dim;
  o["sums_to_p"] = d.sums_to_p;
  o["is_direct"] = d.is_direct;
  o["pairwise_orthogonal"] = d.pairwise_orthogonal;
  return o;
}

ordered_json simplicity_json(const Report& r, const SimplicityResult& s) {
  ordered_json o;
  o["method"] = s.method;
  o["applicable"] = s.applicable;
  o["failed_hypotheses"] = s.failed_hypotheses;
  o["sigma_connected"] = s.sigma_connected;
  o["bracket_nonzero"] = s.bracket_nonzero;
  o["product_nonzero"] = s.product_nonzero;
  o["simple"] = s.simple;
  if (s.witness) o["witness"] = format_element(r.basis_names, *s.witness);
  o["detail"] = s.detail;
  return o;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void render_text_axioms(std::ostringstream& out, const Report& r) {
  out << "axioms: " << (r.axioms.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const LawEntry& entry : law_entries(r.axioms)) {
    if (entry.result->pass) continue;
    out << "  " << entry.name << ": FAIL";
    if (entry.result->counterexample) {
      out << " -- " << entry.result->counterexample->detail;
    }
    out << "\n";
  }
}

void render_text_hypotheses(std::ostringstream& out, const HypothesisReport& hyp) {
  out << "hypotheses: " << (hyp.all() ? "all hold" : "not all hold") << "\n";
  const std::pair<const char*, const PredicateResult*> rows[] = {
      {"two-torsion-free group", &hyp.two_torsion_free},
      {"centerless", &hyp.centerless},
      {"maximal length", &hyp.maximal_length},
      {"symmetric support", &hyp.symmetric_support},
      {"Sigma-multiplicative", &hyp.sigma_multiplicative},
  };
  for (const auto& [name, p] : rows) {
    out << "  " << name << ": " << yesno(p->holds);
    if (!p->holds && !p->detail.empty()) out << " (" << p->detail << ")";
    out << "\n";
  }
  for (const auto& [beta, holds] : hyp.tight_at) {
    out << "  tight at " << beta.to_string() << ": " << yesno(holds) << "\n";
  }
}

void render_text_decomposition(std::ostringstream& out, const DecompositionReport& d) {
  out << "decomposition: " << d.partition.classes.size() << " connection class(es)\n";
  for (std::size_t i = 0; i < d.ideals.size(); ++i) {
    const IdealDescriptor& ideal = d.ideals[i];
    out << "  class " << i << ": {";
    for (std::size_t j = 0; j < ideal.class_elements.size(); ++j) {
      out << (j ? ", " : " ") << ideal.class_elements[j].to_string();
    }
    out << " } -> ideal of dim " << ideal.total.dim() << ", subalgebra "
        << yesno(ideal.is_subalgebra) << ", ideal " << yesno(ideal.is_ideal) << "\n";
  }
  out << "  residual dim: " << d.residual_dim << "\n";
  out << "  sums to P: " << yesno(d.sums_to_p) << ", direct: " << yesno(d.is_direct)
      << ", pairwise orthogonal: " << yesno(d.pairwise_orthogonal) << "\n";
}

void render_text_simplicity(std::ostringstream& out, const Report& r,
                            const SimplicityResult& s) {
  out << "simplicity (" << s.method << "): ";
  if (!s.applicable) {
    out << "INAPPLICABLE";
  } else {
    out << (s.simple ? "SIMPLE" : "NOT SIMPLE");
  }
  if (!s.detail.empty()) out << " -- " << s.detail;
  out << "\n";
  for (const std::string& f : s.failed_hypotheses) {
    out << "  failed hypothesis: " << f << "\n";
  }
  if (s.witness) {
    out << "  witness: " << format_element(r.basis_names, *s.witness) << "\n";
  }
}

}  // namespace

Report run_report(const ColorAlgebra& algebra, const ReportOptions& options) {
  Report r;
  switch (options.stage) {
    case ReportStage::check: r.command = "check"; break;
    case ReportStage::decompose: r.command = "decompose"; break;
    case ReportStage::simple: r.command = "simple"; break;
  }
  r.field = algebra.field().to_string();
  r.dimension = algebra.dim();
  r.group = algebra.group();
  r.g0 = algebra.g0();
  for (const auto& [g, indices] : algebra.components()) {
    r.component_dims.emplace_back(g, static_cast<int>(indices.size()));
  }
  const RestrictedSupport support = RestrictedSupport::of(algebra);
  r.sigma.assign(support.sigma().begin(), support.sigma().end());
  for (const BasisVector& b : algebra.basis()) r.basis_names.push_back(b.name);

  r.axioms = check_axioms(algebra, options.exec);

  const bool analysis = options.stage != ReportStage::check;
  if (analysis && !algebra.group().free_of_2_torsion()) {
    r.warnings.push_back(
        "2-torsion present in the grading group: the decomposition and "
        "simplicity theorems do not apply");
  }
  if (options.stage == ReportStage::simple && options.assume_hypotheses) {
    r.warnings.push_back("hypotheses assumed, not verified");
  }

  if (!r.axioms.all_pass()) {
    if (analysis) {
      r.skipped.emplace_back("hypotheses", kAxiomsSkipReason);
      r.skipped.emplace_back(
          options.stage == ReportStage::decompose ? "decomposition" : "simplicity",
          kAxiomsSkipReason);
    }
    return r;
  }
  if (!analysis) return r;

  r.hypotheses = check_simplicity_hypotheses(algebra);
  if (options.stage == ReportStage::decompose) {
    r.decomposition = decompose(algebra, options.exec);
  } else {
    r.simplicity.push_back(options.method == SimpleMethod::criterion
                               ? is_simple_criterion(algebra, options.assume_hypotheses,
                                                     options.exec)
                               : is_simple_oracle(algebra, options.exec));
  }
  return r;
}

std::string render_json(const Report& r) {
  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = r.command;

  ordered_json alg;
  alg["field"] = r.field;
  alg["dimension"] = r.dimension;
  ordered_json grp;
  grp["free_rank"] = r.group.free_rank;
  grp["torsion"] = r.group.torsion;
  alg["group"] = std::move(grp);
  alg["g0"] = r.g0.coords;
  ordered_json comps = ordered_json::array();
  for (const auto& [g, dim] : r.component_dims) {
    comps.push_back(degree_dim_json(g, dim, "degree"));
  }
  alg["components"] = std::move(comps);
  ordered_json sigma = ordered_json::array();
  for (const GroupElement& g : r.sigma) sigma.push_back(g.coords);
  alg["support"] = std::move(sigma);
  doc["algebra"] = std::move(alg);

  doc["axioms"] = axioms_json(r);
  if (r.hypotheses) doc["hypotheses"] = hypotheses_json(*r.hypotheses);
  if (r.decomposition) doc["decomposition"] = decomposition_json(*r.decomposition);
  if (!r.simplicity.empty()) {
    ordered_json simp = ordered_json::array();
    for (const SimplicityResult& s : r.simplicity) simp.push_back(simplicity_json(r, s));
    doc["simplicity"] = std::move(simp);
  }
  doc["warnings"] = r.warnings;
  ordered_json skipped = ordered_json::array();
  for (const auto& [stage, reason] : r.skipped) {
    ordered_json s;
    s["stage"] = stage;
    s["reason"] = reason;
    skipped.push_back(std::move(s));
  }
  doc["skipped"] = std::move(skipped);
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "algebra: dimension " << r.dimension << " over " << r.field << "\n";
  out << "group: " << r.group.to_string() << ", g0 = " << r.g0.to_string() << "\n";
  out << "components:";
  for (const auto& [g, dim] : r.component_dims) {
    out << " " << g.to_string() << ":" << dim;
  }
  out << "\n";
  out << "support:";
  if (r.sigma.empty()) out << " (empty)";
  for (const GroupElement& g : r.sigma) out << " " << g.to_string();
  out << "\n";

  render_text_axioms(out, r);
  for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
  for (const auto& [stage, reason] : r.skipped) {
    out << stage << ": skipped (" << reason << ")\n";
  }
  if (r.hypotheses) render_text_hypotheses(out, *r.hypotheses);
  if (r.decomposition) render_text_decomposition(out, *r.decomposition);
  for (const SimplicityResult& s : r.simplicity) render_text_simplicity(out, r, s);
  return out.str();
}

}  // namespace pcolor
