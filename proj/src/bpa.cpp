#include "dowling/bpa.hpp"

#include <string>

#include "dowling/gstirling.hpp"
#include "dowling/hurwitz.hpp"
#include "dowling/oracle.hpp"

namespace dowling {

namespace {

Integer ordered_sum(int n, int l, long shift) {
  const auto tri = gstirling_table({0, 1, 0}, n);
  Integer total = 0;
  for (int k = 0; k <= n; ++k) {
    total += tri.at(n, k) * factorial(k) * binomial_general(Integer(l + k + shift), k);
  }
  return total;
}

}  // namespace

Integer bpa_printed_formula(int n, int l) { return ordered_sum(n, l, -1); }

Integer bpa_sum_formula(int n, int l) { return ordered_sum(n, l, 0); }

Integer bpa_egf_coefficient(int n, int l) {
  return to_integer(hz_coeff(hz_bpa(l, n), n), "bpa egf coefficient");
}

Adjudication adjudicate_bpa_formula(int n_max, int l_max) {
  Adjudication adj;
  adj.id = "eq2_bpa";
  adj.subject = "P(n,l) = sum_k S(n,k) k! C(l+k-1,k) versus enumeration of barred "
                "preferential arrangements and 1/(2-e^z)^{l+1}";
  adj.resolution = "enumeration and the EGF agree everywhere; the typeset binomial "
                   "C(l+k-1,k) is reported, C(l+k,k) reproduces both";
  long sum_ok = 0, checked = 0;
  for (int l = 0; l <= l_max; ++l) {
    for (int n = 0; n <= n_max; ++n) {
      const Integer counted = oracle::enum_bpa_count(n, l);
      const Integer egf = bpa_egf_coefficient(n, l);
      const Integer printed = bpa_printed_formula(n, l);
      ++checked;
      if (bpa_sum_formula(n, l) == counted && egf == counted) ++sum_ok;
      adj.add({"n=" + std::to_string(n) + ",l=" + std::to_string(l), printed.get_str(),
               counted.get_str(), printed == counted});
    }
  }
  adj.facts.emplace_back("enumeration_egf_and_C(l+k,k)_agree",
                         std::to_string(sum_ok) + "/" + std::to_string(checked));
  return adj;
}

}  // namespace dowling
