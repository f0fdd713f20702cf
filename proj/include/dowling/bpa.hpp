#pragma once

#include "dowling/exact.hpp"
#include "dowling/report.hpp"

namespace dowling {

/// sum_k S(n,k) k! C(l+k-1, k), the closed form as usually typeset.
Integer bpa_printed_formula(int n, int l);

/// sum_k S(n,k) k! C(l+k, k): each of the k ordered blocks goes to one of l+1 sections.
Integer bpa_sum_formula(int n, int l);

/// n! [z^n] (2 - e^z)^{-(l+1)}.
Integer bpa_egf_coefficient(int n, int l);

/// Typeset closed form versus enumeration and the EGF, 0 <= n <= n_max, 0 <= l <= l_max.
Adjudication adjudicate_bpa_formula(int n_max, int l_max);

}  // namespace dowling
