#pragma once

// Analysis pipeline and report emission (JSON and text).

#include <optional>
#include <string>
#include <vector>

#include "qgwa/fixed_ring.hpp"
#include "qgwa/request.hpp"
#include "qgwa/roots.hpp"

namespace qgwa {

inline constexpr const char* kReportSchemaVersion = "1.0";

struct StageError {
  std::string stage;
  ErrorCode code;
  std::string message;
};

struct AnalysisReport {
  AnalysisRequest request;
  std::optional<Normalization> normalization;
  GwaPtr algebra;
  std::optional<Automorphism> phi;
  std::optional<SubgroupClassification> group;
  std::optional<SymmetryWitness> symmetric;
  std::optional<FixedRingPresentation> fixed_ring;
  std::optional<RootAnalysis> roots;
  std::optional<CongruenceResult> congruences;
  std::optional<MultiplicityClass> multiplicity;
  std::optional<GlDimResult> gldim_algebra;
  std::optional<GlDimFixedResult> gldim_fixed;
  std::optional<CalabiYauResult> calabi_yau;
  std::optional<bool> calabi_yau_fixed;
  std::optional<SimplicityResult> simple_algebra;
  std::optional<SimplicityResult> simple_fixed;
  std::optional<RigidityResult> rigidity;
  std::optional<VerificationReport> verification;
  std::optional<ProbeReport> probe;
  bool complete = true;
  std::vector<std::string> warnings;
  std::vector<StageError> errors;

  /// 0 ok, 2 hypothesis violation, 4 cross-check or verification failure.
  int exit_code() const;
};

AnalysisReport run_analysis(const AnalysisRequest& request);

enum class ReportFormat { Json, Text };

std::string emit_report(const AnalysisReport& report, ReportFormat format);

}  // namespace qgwa
