#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dowling/gstirling.hpp"
#include "dowling/report.hpp"

namespace dowling {

/// Parameter ranges an identity catalog is checked over.
struct ParamGrid {
  std::vector<long> alpha{0, 1, 2};
  std::vector<long> m{1, 2, 3};
  std::vector<long> r{0, 1, 2};
  std::vector<long> x{0, 1, 2, 3};
  std::vector<long> lambda{1, 2, 3};
};

/// One parameter point of an identity instance. Fields an identity does not use stay 0.
struct GridPoint {
  long alpha = 0;
  long m = 1;
  long r = 0;
  long s = 0;
  long lambda = 0;
  long x = 0;
  bool uses_s = false;
  bool uses_lambda = false;
  bool uses_x = false;

  std::string label() const;
};

/// A reading of a Bell factor written with two parameters, e.g. B(x, p, q), mapped onto
/// the canonical B_n(x; alpha, beta, r).
struct Binding {
  std::string name;
  std::function<GStirlingParams(long first, long second)> map;
};

using SidesFn = std::function<std::pair<BiPoly, BiPoly>(int n, const GridPoint& p,
                                                        const Binding& binding)>;

struct IdentitySpec {
  std::string id;
  std::string statement;
  bool flagged = false;
  bool free_lambda = false;  // lambda is a formal indeterminate in the statement
  std::vector<GridPoint> points;
  std::vector<Binding> candidates;  // empty: no ambiguous factor
  std::string frozen_binding;       // name of the candidate used for the verdict
  SidesFn sides;
  std::optional<std::string> corrected_statement;
  SidesFn corrected_sides;
  std::string note;
};

/// Checks `spec` for n = 0..n_max at every point. Every candidate binding is tried;
/// the verdict is taken under the frozen one.
IdentityResult run_identity(const IdentitySpec& spec, int n_max);

/// Candidate readings for a two-parameter Bell factor.
std::vector<Binding> two_parameter_bindings();

/// Picks the selected catalog ids (all when `ids` is empty); throws on unknown ids.
std::vector<const IdentitySpec*> select_identities(const std::vector<IdentitySpec>& catalog,
                                                   const std::vector<std::string>& ids);

}  // namespace dowling
