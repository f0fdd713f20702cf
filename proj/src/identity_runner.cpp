#include "dowling/identity_runner.hpp"

#include <algorithm>
#include <stdexcept>

namespace dowling {

std::string GridPoint::label() const {
  std::string out = "m=" + std::to_string(m) + ",r=" + std::to_string(r) +
                    ",alpha=" + std::to_string(alpha);
  if (uses_s) out += ",s=" + std::to_string(s);
  if (uses_lambda) out += ",lambda=" + std::to_string(lambda);
  if (uses_x) out += ",x=" + std::to_string(x);
  return out;
}

IdentityResult run_identity(const IdentitySpec& spec, int n_max) {
  IdentityResult result;
  result.id = spec.id;
  result.statement = spec.statement;
  result.flagged = spec.flagged;
  result.note = spec.note;

  static const Binding kNoBinding{"", {}};
  const Binding* frozen = &kNoBinding;
  if (!spec.candidates.empty()) {
    auto it = std::find_if(spec.candidates.begin(), spec.candidates.end(),
                           [&](const Binding& b) { return b.name == spec.frozen_binding; });
    if (it == spec.candidates.end()) {
      throw std::logic_error(spec.id + ": frozen binding is not a candidate");
    }
    frozen = &*it;
    result.binding = frozen->name;
  }

  long lambda_one_failures = 0;
  for (const auto& point : spec.points) {
    for (int n = 0; n <= n_max; ++n) {
      auto [lhs, rhs] = spec.sides(n, point, *frozen);
      if (!result.record(n, point.label(), lhs, rhs) && spec.free_lambda) {
        if (!(lhs - rhs).eval_lambda(1).is_zero()) ++lambda_one_failures;
      }
    }
  }
  if (spec.free_lambda) result.lambda_one_failures = lambda_one_failures;

  for (const auto& cand : spec.candidates) {
    BindingOutcome outcome{cand.name, 0};
    for (const auto& point : spec.points) {
      for (int n = 0; n <= n_max; ++n) {
        try {
          auto [lhs, rhs] = spec.sides(n, point, cand);
          if (lhs != rhs) ++outcome.failures;
        } catch (const std::invalid_argument&) {
          // the reading is undefined at this point, e.g. all-zero parameters
          ++outcome.failures;
        }
      }
    }
    result.candidates.push_back(std::move(outcome));
  }

  if (spec.corrected_statement && spec.corrected_sides) {
    result.corrected_statement = spec.corrected_statement;
    long failures = 0;
    for (const auto& point : spec.points) {
      for (int n = 0; n <= n_max; ++n) {
        auto [lhs, rhs] = spec.corrected_sides(n, point, *frozen);
        if (lhs != rhs) ++failures;
      }
    }
    result.corrected_failures = failures;
  }
  return result;
}

std::vector<Binding> two_parameter_bindings() {
  return {
      {"B(x;alpha=p,beta=q,r=0)", [](long p, long q) { return GStirlingParams{p, q, 0}; }},
      {"B(x;alpha=q,beta=p,r=0)", [](long p, long q) { return GStirlingParams{q, p, 0}; }},
      {"B(x;alpha=0,beta=p,r=q)", [](long p, long q) { return GStirlingParams{0, p, q}; }},
      {"B(x;alpha=0,beta=q,r=p)", [](long p, long q) { return GStirlingParams{0, q, p}; }},
  };
}

std::vector<const IdentitySpec*> select_identities(const std::vector<IdentitySpec>& catalog,
                                                   const std::vector<std::string>& ids) {
  std::vector<const IdentitySpec*> out;
  if (ids.empty()) {
    for (const auto& spec : catalog) out.push_back(&spec);
    return out;
  }
  for (const auto& id : ids) {
    auto it = std::find_if(catalog.begin(), catalog.end(),
                           [&](const IdentitySpec& s) { return s.id == id; });
    if (it == catalog.end()) throw std::invalid_argument("unknown identity id: " + id);
    out.push_back(&*it);
  }
  return out;
}

}  // namespace dowling
