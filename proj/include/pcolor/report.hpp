#pragma once

#include "pcolor/decomposition.hpp"

namespace pcolor {

enum class ReportStage { check, decompose, simple };
enum class SimpleMethod { criterion, oracle };

struct ReportOptions {
  ReportStage stage = ReportStage::check;
  SimpleMethod method = SimpleMethod::criterion;  ///< used when stage == simple
  bool assume_hypotheses = false;
  Execution exec = Execution::parallel;
};

/// Everything one pipeline run produced, flattened for rendering.  Both
/// renderers are pure functions of this value, so two runs on the same input
/// yield byte-identical output.  Stages whose prerequisites failed are listed
/// in `skipped` with a reason instead of being silently asserted.
struct Report {
  std::string command;  ///< "check", "decompose" or "simple"

  std::string field;
  int dimension = 0;
  GroupSpec group;
  GroupElement g0;
  std::vector<std::pair<GroupElement, int>> component_dims;  ///< sorted by degree
  std::vector<GroupElement> sigma;                           ///< restricted support
  std::vector<std::string> basis_names;

  AxiomReport axioms;
  std::optional<HypothesisReport> hypotheses;
  std::optional<DecompositionReport> decomposition;
  std::vector<SimplicityResult> simplicity;

  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, std::string>> skipped;  ///< (stage, reason)
};

Report run_report(const ColorAlgebra& algebra, const ReportOptions& options = {});

/// Machine rendering: versioned JSON (top-level "schema": 1), two-space
/// indent, trailing newline.
std::string render_json(const Report& report);

/// Line-oriented human rendering of the same data.
std::string render_text(const Report& report);

}  // namespace pcolor
