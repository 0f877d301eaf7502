#pragma once

// Input documents:
//
//   [algebra]
//   conductor = 3
//   base = "laurent"
//   q = "1/2"
//   a = "(h^2-1)*(h^2-4)"
//
//   [automorphism]
//   gamma = "-1"
//   mu = "z"
//
//   [options]
//   verify = true

#include <optional>
#include <set>
#include <string>

#include "qgwa/error.hpp"
#include "qgwa/fixed_space.hpp"

namespace qgwa {

class ParseFailure : public Error {
 public:
  ParseFailure(int line, int column, const std::string& message, std::set<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::set<std::string> expected_;
};

struct AnalysisOptions {
  TruncationBounds bounds;
  long k_bound = 128;
  bool verify = false;
  bool probe = false;
};

struct AnalysisRequest {
  int conductor = 1;
  BaseKind base = BaseKind::Poly;
  FieldElement q{2L};
  FactoredPoly a;
  FieldElement gamma{1L};
  FieldElement mu{1L};
  int mu_hpower = 0;
  bool omega = false;
  std::optional<int> i0;
  AnalysisOptions options;
};

bool operator==(const AnalysisRequest& lhs, const AnalysisRequest& rhs);

/// Field expression over Q(zeta_N): rationals, z, + - * / ^ and parentheses.
FieldElement parse_field_expr(const std::string& text, int conductor);

/// Product of (h - c)^e, (h^e - c) (split over the field), h^e and scalars.
FactoredPoly parse_factored_poly(const std::string& text, int conductor);

/// Throws ParseFailure (syntax) or Error(SemanticError).
AnalysisRequest parse_request(const std::string& text);

/// Canonical document; parse_request(emit_request(r)) == r.
std::string emit_request(const AnalysisRequest& request);

}  // namespace qgwa
