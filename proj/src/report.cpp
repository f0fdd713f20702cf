#include "dowling/report.hpp"

#include <algorithm>

namespace dowling {

std::string to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "MISMATCH"; }

bool IdentityResult::record(int n, std::string params, const BiPoly& lhs, const BiPoly& rhs) {
  ++instances;
  if (lhs == rhs) return true;
  ++failure_count;
  if (failures.size() < kMaxListedFailures) {
    failures.push_back({n, std::move(params), lhs, rhs});
  }
  return false;
}

void Adjudication::add(Evidence e) {
  ++cases;
  if (!e.agrees) ++disagreements;
  // Keep disagreements first so the sample shows the finding.
  if (evidence.size() < kMaxEvidence) {
    evidence.push_back(std::move(e));
  } else if (!e.agrees) {
    auto it = std::find_if(evidence.begin(), evidence.end(),
                           [](const Evidence& ev) { return ev.agrees; });
    if (it != evidence.end()) *it = std::move(e);
  }
}

void IdentityReport::append(IdentityReport other) {
  for (auto& r : other.identities) identities.push_back(std::move(r));
  for (auto& a : other.adjudications) adjudications.push_back(std::move(a));
}

const IdentityResult* IdentityReport::find(std::string_view id) const {
  auto it = std::find_if(identities.begin(), identities.end(),
                         [&](const IdentityResult& r) { return r.id == id; });
  return it == identities.end() ? nullptr : &*it;
}

std::vector<std::string> IdentityReport::unflagged_failures() const {
  std::vector<std::string> out;
  for (const auto& r : identities) {
    if (!r.flagged && r.verdict() == Verdict::Mismatch) out.push_back(r.id);
  }
  return out;
}

}  // namespace dowling
