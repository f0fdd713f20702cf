#include "dowling/asymptotics.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "dowling/hurwitz.hpp"

namespace dowling {

int IntegerPartition::size() const {
  int s = 0;
  for (std::size_t i = 1; i < g.size(); ++i) s += static_cast<int>(i) * g[i];
  return s;
}

int IntegerPartition::parts() const {
  int p = 0;
  for (std::size_t i = 1; i < g.size(); ++i) p += g[i];
  return p;
}

std::vector<IntegerPartition> partitions_with_parts(int n, int parts) {
  if (n < 0 || parts < 0) throw std::invalid_argument("partitions_with_parts: negative input");
  std::vector<IntegerPartition> out;
  std::vector<int> g(static_cast<std::size_t>(n) + 1, 0);
  // parts chosen in non-increasing order, largest allowed part `cap`
  std::function<void(int, int, int)> rec = [&](int left, int slots, int cap) {
    if (slots == 0) {
      if (left == 0) out.push_back({g});
      return;
    }
    // each remaining slot needs at least 1
    for (int part = std::min(cap, left - (slots - 1)); part >= 1; --part) {
      if (part * slots < left) break;
      ++g[static_cast<std::size_t>(part)];
      rec(left - part, slots - 1, part);
      --g[static_cast<std::size_t>(part)];
    }
  };
  rec(n, parts, n);
  return out;
}

namespace {

std::vector<int> trimmed(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

void add_term(MomentPoly& p, const std::vector<int>& exps, const Rational& c) {
  if (c == 0) return;
  auto key = trimmed(exps);
  auto& slot = p[key];
  slot += c;
  if (slot == 0) p.erase(key);
}

Rational moment_eval(const MomentPoly& p, const std::vector<Rational>& m) {
  Rational total = 0;
  for (const auto& [exps, c] : p) {
    Rational term = c;
    for (std::size_t j = 1; j < exps.size(); ++j) {
      for (int k = 0; k < exps[j]; ++k) term *= m.at(j);
    }
    total += term;
  }
  return total;
}

}  // namespace

MomentPoly w_symbolic(int n, int e) {
  if (n < 0 || e < 0 || e > n) throw std::out_of_range("w_symbolic: need 0 <= e <= n");
  MomentPoly out;
  for (const auto& part : partitions_with_parts(n, n - e)) {
    Integer denom = 1;
    for (int gi : part.g) denom *= factorial(gi);
    add_term(out, part.g, Rational(1, denom));
  }
  return out;
}

MomentPoly w_transcribed(int n, int e) {
  MomentPoly out;
  // coefficient / (extra * (n - shift)!) * m1^{n-shift} * prod m_j^{k_j}
  auto term = [&](int shift, const Integer& extra, std::vector<int> others,
                  const Integer& scale = 1) {
    if (n - shift < 0) return;
    std::vector<int> exps(std::max<std::size_t>(others.size(), 2), 0);
    for (std::size_t j = 0; j < others.size(); ++j) exps[j] = others[j];
    exps[1] += n - shift;
    add_term(out, exps, Rational(scale, extra * factorial(n - shift)));
  };
  switch (e) {
    case 0:
      term(0, 1, {});
      break;
    case 1:
      term(2, 1, {0, 0, 1});
      break;
    case 2:
      term(3, 1, {0, 0, 0, 1});
      term(4, 2, {0, 0, 2});
      break;
    case 3:
      term(4, 1, {0, 0, 0, 0, 1});
      term(5, 1, {0, 0, 1, 1});
      // bracket written as D(5)/2! = (5!/2!) m_5, cubed
      term(6, 6, {0, 0, 0, 0, 0, 3}, ipow(60, 3));
      break;
    case 4:
      term(5, 1, {0, 0, 0, 0, 0, 1});
      term(6, 2, {0, 0, 0, 2});
      term(7, 2, {0, 0, 2, 1});
      term(8, 24, {0, 0, 4});
      term(6, 2, {0, 0, 1, 0, 1});
      break;
    default:
      throw std::out_of_range("w_transcribed: only e = 0..4 are transcribed");
  }
  return out;
}

std::string to_string(const MomentPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, c] : p) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    for (std::size_t j = 1; j < exps.size(); ++j) {
      if (exps[j] == 0) continue;
      out << "*m" << j;
      if (exps[j] > 1) out << '^' << exps[j];
    }
  }
  return out.str();
}

std::vector<Rational> theta_coefficients(int n, DowlingParams base, long x0) {
  const auto d = dowling_via_egf(n, base, x0, 1);
  std::vector<Rational> m(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    m[j] = Rational(d[j], factorial(static_cast<long>(j)));
    m[j].canonicalize();
  }
  return m;
}

Rational w_value(int n, int e, DowlingParams base, long x0) {
  if (n < 1 || e < 0 || e > n - 1) {
    throw std::out_of_range("w_value: need n >= 1 and 0 <= e <= n-1 (got n=" +
                            std::to_string(n) + ", e=" + std::to_string(e) + ")");
  }
  return moment_eval(w_symbolic(n, e), theta_coefficients(n, base, x0));
}

Integer theta_power_coefficient(int n, long lambda, DowlingParams base, long x0) {
  if (lambda < 0) throw std::invalid_argument("theta_power_coefficient: lambda must be >= 0");
  const auto d = dowling_via_egf(n, base, x0, 1);
  HurwitzSeries theta(n, std::vector<Rational>(d.begin(), d.end()));
  return to_integer(hz_pow(theta, static_cast<unsigned long>(lambda))[n], "theta power");
}

AsymptoticEstimate dowling_asymptotic(int n, long lambda, int e_max, DowlingParams base,
                                      long x0) {
  if (n < 0) throw std::invalid_argument("dowling_asymptotic: n must be non-negative");
  if (e_max < 0) throw std::invalid_argument("dowling_asymptotic: e_max must be non-negative");
  if (lambda <= n) {
    throw std::invalid_argument("dowling_asymptotic: lambda must exceed n (lambda=" +
                                std::to_string(lambda) + ", n=" + std::to_string(n) + ")");
  }
  AsymptoticEstimate est;
  est.n = n;
  est.lambda = lambda;
  est.terms_used = e_max + 1;
  est.exact = theta_power_coefficient(n, lambda, base, x0);
  if (n == 0) {
    est.estimate = 1;
  } else {
    const auto m = theta_coefficients(n, base, x0);
    Rational sum = 0;
    for (int e = 0; e <= std::min(e_max, n - 1); ++e) {
      Rational w = moment_eval(w_symbolic(n, e), m);
      sum += w / Rational(gen_falling(Integer(lambda) - n + e, 1, e));
    }
    est.estimate = Rational(factorial(n) * gen_falling(lambda, 1, n)) * sum;
  }
  Rational diff = abs(est.estimate - est.exact);
  est.rel_error = est.exact == 0 ? diff : Rational(diff / abs(est.exact));
  est.value = to_decimal(est.estimate);
  est.exact_value = to_decimal(est.exact);
  est.rel_error_value = to_decimal(est.rel_error);
  return est;
}

Adjudication adjudicate_w_formulas(int n_max) {
  Adjudication adj;
  adj.id = "w_formulas";
  adj.subject = "transcribed W(n,0)..W(n,4) versus the generic partition sum";
  adj.resolution =
      "the generic sum over partitions of n with n-e parts is implemented; W(n,3)'s third "
      "factor and W(n,4)'s m2*m4 coefficient are reported where they differ";
  for (int e = 0; e <= 4; ++e) {
    long mismatches = 0;
    for (int n = 1; n <= n_max; ++n) {
      if (e > n - 1) continue;
      const auto generic = w_symbolic(n, e);
      const auto printed = w_transcribed(n, e);
      const bool same = generic == printed;
      if (!same) ++mismatches;
      adj.add({"W(" + std::to_string(n) + "," + std::to_string(e) + ")", to_string(printed),
               to_string(generic), same});
    }
    adj.facts.emplace_back("W(n," + std::to_string(e) + ")_mismatching_n",
                           std::to_string(mismatches));
  }
  return adj;
}

Adjudication adjudicate_lambda_overload(int n_max, const std::vector<DowlingParams>& bases,
                                        const std::vector<long>& x_values,
                                        const std::vector<long>& lambda_values) {
  Adjudication adj;
  adj.id = "lambda_overload";
  adj.subject = "Theta(z)^lambda versus D^{lambda,x}_{m,r}(n;alpha) with lambda as the order";
  adj.resolution =
      "the expansion uses lambda as the power of Theta; the two readings coincide exactly "
      "when r = 0 because Theta^lambda carries e_alpha^{r lambda}";
  for (const auto& base : bases) {
    const auto exact_poly = [&](int n) { return dowling_poly(n, base).poly; };
    for (long x0 : x_values) {
      for (long l : lambda_values) {
        for (int n = 0; n <= n_max; ++n) {
          Integer power = theta_power_coefficient(n, l, base, x0);
          Integer order = exact_poly(n).eval(x0, l);
          adj.add({base.to_string() + ",x=" + std::to_string(x0) + ",lambda=" +
                       std::to_string(l) + ",n=" + std::to_string(n),
                   power.get_str(), order.get_str(), power == order});
        }
      }
    }
  }
  return adj;
}

}  // namespace dowling
