#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dowling/exact.hpp"

namespace dowling {

enum class Verdict { Pass, Mismatch };

std::string to_string(Verdict v);

/// One failing (identity, n, parameters) instance.
struct InstanceFailure {
  int n = 0;
  std::string params;
  BiPoly lhs;
  BiPoly rhs;
  BiPoly residual() const { return lhs - rhs; }
};

/// Outcome of one candidate reading of an ambiguously-written factor.
struct BindingOutcome {
  std::string binding;
  long failures = 0;
  Verdict verdict() const { return failures == 0 ? Verdict::Pass : Verdict::Mismatch; }
};

/// Verdict and evidence for one catalog identity across a parameter grid.
struct IdentityResult {
  static constexpr std::size_t kMaxListedFailures = 8;

  std::string id;
  std::string statement;
  bool flagged = false;
  std::string binding;  // frozen reading of ambiguous factors, empty if none
  long instances = 0;
  long failure_count = 0;
  std::vector<InstanceFailure> failures;  // first kMaxListedFailures only
  std::vector<BindingOutcome> candidates;

  // Diagnostics for identities stated with a free lambda.
  std::optional<long> lambda_one_failures;
  std::optional<std::string> corrected_statement;
  std::optional<long> corrected_failures;
  std::string note;

  Verdict verdict() const { return failure_count == 0 ? Verdict::Pass : Verdict::Mismatch; }

  /// Records one instance; returns true when both sides agree.
  bool record(int n, std::string params, const BiPoly& lhs, const BiPoly& rhs);
};

struct Evidence {
  std::string label;
  std::string printed;
  std::string reference;
  bool agrees = false;
};

/// A known discrepancy between a printed formula and the verified object.
struct Adjudication {
  std::string id;
  std::string subject;
  std::string resolution;
  long cases = 0;
  long disagreements = 0;
  std::vector<Evidence> evidence;  // truncated sample
  std::vector<std::pair<std::string, std::string>> facts;
  static constexpr std::size_t kMaxEvidence = 12;

  void add(Evidence e);
  std::string verdict() const {
    return disagreements == 0 ? "PRINTED_FORM_CONFIRMED" : "PRINTED_FORM_MISMATCH";
  }
};

struct IdentityReport {
  std::vector<IdentityResult> identities;
  std::vector<Adjudication> adjudications;

  void append(IdentityReport other);
  const IdentityResult* find(std::string_view id) const;
  /// Ids of identities that are not flagged and did not verify.
  std::vector<std::string> unflagged_failures() const;
};

}  // namespace dowling
