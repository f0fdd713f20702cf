#include "dowling/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "dowling/asymptotics.hpp"
#include "dowling/bpa.hpp"
#include "dowling/dowling.hpp"
#include "dowling/gbell.hpp"
#include "dowling/gstirling.hpp"
#include "dowling/hurwitz.hpp"
#include "dowling/identity_runner.hpp"
#include "dowling/integral.hpp"
#include "dowling/oracle.hpp"

namespace dowling::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kMaxTableN = 60;
constexpr int kMaxCheckN = 16;
constexpr int kMaxAsymptoticN = 10;
constexpr int kMaxWFormulaN = 10;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

std::vector<long> or_default(const std::optional<std::vector<long>>& v, std::vector<long> d) {
  return v ? *v : d;
}

int n_max_or(const RunConfig& cfg, int d, int cap, const char* cap_name) {
  const int n = cfg.n_max.value_or(d);
  if (n < 0) throw UsageError("--n-max must be non-negative (got " + std::to_string(n) + ")");
  if (n > cap) {
    throw UsageError("--n-max " + std::to_string(n) + " exceeds the cap " + cap_name + "=" +
                     std::to_string(cap));
  }
  return n;
}

ParamGrid grid_from(const RunConfig& cfg) {
  ParamGrid g;
  if (cfg.alpha) g.alpha = *cfg.alpha;
  if (cfg.m) g.m = *cfg.m;
  if (cfg.r) g.r = *cfg.r;
  if (cfg.x) g.x = *cfg.x;
  if (cfg.lambda) g.lambda = *cfg.lambda;
  return g;
}

Format format_or(const RunConfig& cfg, Format d) { return cfg.format.value_or(d); }

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < t.headers.size(); ++i) obj[t.headers[i]] = row.at(i);
    rows.push_back(std::move(obj));
  }
  return rows;
}

json adjudication_json(const Adjudication& a) {
  json facts = json::object();
  for (const auto& [k, v] : a.facts) facts[k] = v;
  json ev = json::array();
  for (const auto& e : a.evidence) {
    ev.push_back({{"label", e.label},
                  {"printed", e.printed},
                  {"reference", e.reference},
                  {"agrees", e.agrees}});
  }
  return {{"id", a.id},
          {"subject", a.subject},
          {"resolution", a.resolution},
          {"verdict", a.verdict()},
          {"cases", a.cases},
          {"disagreements", a.disagreements},
          {"facts", facts},
          {"evidence", ev}};
}

json identity_json(const IdentityResult& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"n", f.n},
                        {"params", f.params},
                        {"lhs", f.lhs.to_string()},
                        {"rhs", f.rhs.to_string()},
                        {"residual", f.residual().to_string()}});
  }
  json cands = json::array();
  for (const auto& c : r.candidates) {
    cands.push_back(
        {{"binding", c.binding}, {"failures", c.failures}, {"verdict", to_string(c.verdict())}});
  }
  json j = {{"id", r.id},
            {"statement", r.statement},
            {"flagged", r.flagged},
            {"verdict", to_string(r.verdict())},
            {"binding", r.binding},
            {"instances", r.instances},
            {"failure_count", r.failure_count},
            {"failures", failures},
            {"candidates", cands}};
  if (r.lambda_one_failures) j["lambda_one_failures"] = *r.lambda_one_failures;
  if (r.corrected_statement) j["corrected_statement"] = *r.corrected_statement;
  if (r.corrected_failures) j["corrected_failures"] = *r.corrected_failures;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string render(const Table& t, Format f, const std::string& command,
                   const std::vector<Adjudication>& adjudications = {}) {
  switch (f) {
    case Format::Csv:
      return render_csv(t);
    case Format::Pretty: {
      std::string out = render_pretty(t);
      for (const auto& a : adjudications) {
        out += "\n[" + a.id + "] " + a.verdict() + " (" + std::to_string(a.disagreements) + "/" +
               std::to_string(a.cases) + " disagree)\n";
      }
      return out;
    }
    case Format::Json: {
      json j = {{"schema", "1"}, {"command", command}, {"rows", table_json(t)}};
      json adj = json::array();
      for (const auto& a : adjudications) adj.push_back(adjudication_json(a));
      j["adjudications"] = adj;
      return j.dump(2) + "\n";
    }
  }
  return {};
}

// Merges same-id results from several parameter points.
void merge_into(std::vector<IdentityResult>& acc, IdentityResult r) {
  auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& a) { return a.id == r.id; });
  if (it == acc.end()) {
    acc.push_back(std::move(r));
    return;
  }
  it->instances += r.instances;
  it->failure_count += r.failure_count;
  for (auto& f : r.failures) {
    if (it->failures.size() < IdentityResult::kMaxListedFailures) it->failures.push_back(f);
  }
}

IdentityReport unfair_over_grid(int n_max, const ParamGrid& g) {
  IdentityReport report;
  if (n_max < 1) return report;
  for (long a : g.alpha) {
    for (long m : g.m) {
      if (m < 1) continue;
      for (long r : g.r) {
        for (auto& res : check_unfair_identities(n_max, a, m, r).identities) {
          merge_into(report.identities, std::move(res));
        }
      }
    }
  }
  return report;
}

std::vector<DowlingParams> dowling_bases(const ParamGrid& g) {
  std::vector<DowlingParams> out;
  for (long m : g.m) {
    for (long r : g.r) {
      for (long a : g.alpha) {
        if (m >= 1 && r >= 0 && a >= 0) out.push_back({m, r, a});
      }
    }
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "pretty") return Format::Pretty;
  throw UsageError("unknown format '" + s + "' (expected csv, json or pretty)");
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

std::string render_csv(const Table& t) {
  auto cell = [](const std::string& c) {
    if (c.find_first_of(",\"\n") == std::string::npos) return c;
    std::string q = "\"";
    for (char ch : c) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cell(cells[i]);
    }
    out += '\n';
  };
  line(t.headers);
  for (const auto& row : t.rows) line(row);
  return out;
}

std::string render_pretty(const Table& t) {
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(width[i] - cells[i].size(), ' ');
    }
    out += '\n';
  };
  line(t.headers);
  for (const auto& row : t.rows) line(row);
  return out;
}

CommandOutput run_table(const RunConfig& cfg) {
  const int n_max = n_max_or(cfg, 8, kMaxTableN, "max-table-n");
  Table t;
  if (cfg.kind == "gstirling") {
    t.headers = {"alpha", "beta", "r", "n", "k", "value"};
    for (long a : or_default(cfg.alpha, {0})) {
      for (long b : or_default(cfg.m, {1})) {
        for (long r : or_default(cfg.r, {0})) {
          if (a == 0 && b == 0 && r == 0) throw UsageError("(alpha,beta,r) = (0,0,0) is excluded");
          const auto tri = gstirling_table({a, b, r}, n_max);
          for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
              t.rows.push_back({std::to_string(a), std::to_string(b), std::to_string(r),
                                std::to_string(n), std::to_string(k), tri.at(n, k).get_str()});
            }
          }
        }
      }
    }
  } else if (cfg.kind == "gbell") {
    t.headers = {"alpha", "beta", "r", "n", "poly"};
    TriangleCache cache;
    for (long a : or_default(cfg.alpha, {0})) {
      for (long b : or_default(cfg.m, {1})) {
        for (long r : or_default(cfg.r, {0})) {
          if (a == 0 && b == 0 && r == 0) throw UsageError("(alpha,beta,r) = (0,0,0) is excluded");
          for (int n = 0; n <= n_max; ++n) {
            t.rows.push_back({std::to_string(a), std::to_string(b), std::to_string(r),
                              std::to_string(n), gbell(cache, n, {a, b, r}).to_string()});
          }
        }
      }
    }
  } else if (cfg.kind == "dowling") {
    t.headers = {"m", "r", "alpha", "n", "poly"};
    for (long m : or_default(cfg.m, {1})) {
      for (long r : or_default(cfg.r, {0})) {
        for (long a : or_default(cfg.alpha, {0})) {
          if (m < 1 || r < 0 || a < 0) {
            throw UsageError("dowling table needs m >= 1, r >= 0, alpha >= 0");
          }
          for (int n = 0; n <= n_max; ++n) {
            t.rows.push_back({std::to_string(m), std::to_string(r), std::to_string(a),
                              std::to_string(n), dowling_poly(n, {m, r, a}).poly.to_string()});
          }
        }
      }
    }
  } else if (cfg.kind == "bpa") {
    t.headers = {"l", "n", "count"};
    for (long l : or_default(cfg.lambda, {0})) {
      if (l < 0) throw UsageError("bpa table needs l >= 0 (passed via --lambda)");
      const auto series = hz_bpa(static_cast<int>(l), n_max);
      for (int n = 0; n <= n_max; ++n) {
        t.rows.push_back({std::to_string(l), std::to_string(n),
                          to_integer(series[n], "bpa").get_str()});
      }
    }
  } else {
    SpecialKind kind;
    try {
      kind = parse_special_kind(cfg.kind);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown table kind '" + cfg.kind + "'");
    }
    t.headers = {"kind", "alpha", "beta", "r", "n", "k", "value"};
    for (long a : or_default(cfg.alpha, {1})) {
      for (long b : or_default(cfg.m, {1})) {
        for (long r : or_default(cfg.r, {1})) {
          const SpecialArgs args{a, b, r};
          const auto p = special_case_params(kind, args);
          for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
              t.rows.push_back({to_string(kind), std::to_string(p.alpha), std::to_string(p.beta),
                                std::to_string(p.r), std::to_string(n), std::to_string(k),
                                special_case(kind, n, k, args).get_str()});
            }
          }
        }
      }
    }
  }
  return {render(t, format_or(cfg, Format::Csv), "table"), 0};
}

CommandOutput run_check(const RunConfig& cfg) {
  const int n_max = n_max_or(cfg, 12, kMaxCheckN, "max-check-n");
  const auto& s = cfg.suite;
  if (s != "bell" && s != "dowling" && s != "unfair" && s != "all") {
    throw UsageError("unknown suite '" + s + "' (expected bell, dowling, unfair or all)");
  }
  const ParamGrid grid = grid_from(cfg);
  const bool bell = s == "bell" || s == "all";
  const bool dow = s == "dowling" || s == "all";
  const bool unfair = s == "unfair" || s == "all";

  IdentityReport report;
  if (bell) report.append(check_bell_identities({}, n_max, grid));
  if (dow) report.append(check_dowling_identities({}, n_max, grid));
  if (unfair) report.append(unfair_over_grid(n_max, grid));

  if (!report.identities.empty()) {
    if (bell) {
      report.adjudications.push_back(adjudicate_bell_egf(n_max, grid));
      report.adjudications.push_back(
          adjudicate_bpa_formula(std::min(n_max, oracle::kMaxBpaN), oracle::kMaxBpaBars));
      report.adjudications.push_back(adjudicate_r_stirling_entry(n_max, grid.r));
    }
    if (dow) {
      report.adjudications.push_back(adjudicate_w_formulas(std::min(n_max, kMaxWFormulaN)));
      report.adjudications.push_back(
          adjudicate_lambda_overload(std::min(n_max, 6), dowling_bases(grid), grid.x, grid.lambda));
    }
    if (bell || dow) {
      report.adjudications.push_back(adjudicate_integrands(std::min(n_max, 8)));
    }
  }

  const auto failing = report.unflagged_failures();
  const int code = failing.empty() ? 0 : 1;
  const Format f = format_or(cfg, Format::Json);
  if (f == Format::Json) {
    json ids = json::array();
    for (const auto& r : report.identities) ids.push_back(identity_json(r));
    json adj = json::array();
    for (const auto& a : report.adjudications) adj.push_back(adjudication_json(a));
    json j = {{"schema", "1"},
              {"command", "check"},
              {"suite", s},
              {"n_max", n_max},
              {"identities", ids},
              {"adjudications", adj},
              {"unflagged_failures", failing},
              {"exit_code", code}};
    return {j.dump(2) + "\n", code};
  }
  Table t;
  t.headers = {"id", "flagged", "verdict", "binding", "instances", "failures"};
  for (const auto& r : report.identities) {
    t.rows.push_back({r.id, r.flagged ? "yes" : "no", to_string(r.verdict()), r.binding,
                      std::to_string(r.instances), std::to_string(r.failure_count)});
  }
  return {render(t, f, "check", report.adjudications), code};
}

CommandOutput run_asymptotic(const RunConfig& cfg) {
  const int n_max = n_max_or(cfg, 5, kMaxAsymptoticN, "max-asymptotic-n");
  Table t;
  t.headers = {"m", "r", "alpha", "x", "n", "lambda", "e_max", "estimate", "exact", "rel_error"};
  const auto lambdas = or_default(cfg.lambda, {100, 1000, 10000});
  for (long m : or_default(cfg.m, {1})) {
    for (long r : or_default(cfg.r, {0})) {
      for (long a : or_default(cfg.alpha, {0})) {
        if (m < 1 || r < 0 || a < 0) throw UsageError("asymptotic needs m >= 1, r >= 0, alpha >= 0");
        for (long x0 : or_default(cfg.x, {1})) {
          for (int n = 1; n <= n_max; ++n) {
            for (long l : lambdas) {
              if (l <= n) {
                throw UsageError("lambda=" + std::to_string(l) + " must exceed n=" +
                                 std::to_string(n));
              }
              for (int e = 0; e <= 4; ++e) {
                const auto est = dowling_asymptotic(n, l, e, {m, r, a}, x0);
                t.rows.push_back({std::to_string(m), std::to_string(r), std::to_string(a),
                                  std::to_string(x0), std::to_string(n), std::to_string(l),
                                  std::to_string(e), est.value, est.exact_value,
                                  est.rel_error_value});
              }
            }
          }
        }
      }
    }
  }
  std::vector<Adjudication> adj;
  if (format_or(cfg, Format::Csv) != Format::Csv) {
    adj.push_back(adjudicate_w_formulas(std::max(n_max, 1)));
  }
  return {render(t, format_or(cfg, Format::Csv), "asymptotic", adj), 0};
}

CommandOutput run_quad(const RunConfig& cfg) {
  const int n_max = n_max_or(cfg, 8, static_cast<int>(kMaxIntegralN), "max-integral-n");
  Table t;
  t.headers = {"kind", "j", "n", "x", "lambda", "m", "r",
               "value", "exact", "rel_error", "est_abs_error", "nodes"};
  bool ok = true;
  for (long j = 0; j <= 6; ++j) {
    for (long n = 1; n <= n_max; ++n) {
      const auto q = casado_check(j, n);
      const double exact = casado_closed_form(j, n);
      const double rel = relative_error(q.value, exact);
      if (rel > 1e-10) ok = false;
      t.rows.push_back({"casado", std::to_string(j), std::to_string(n), "", "", "", "",
                        fmt_double(q.value), fmt_double(exact), fmt_double(rel),
                        fmt_double(q.est_abs_error), std::to_string(q.nodes_used)});
    }
  }
  for (long m : or_default(cfg.m, {1, 2})) {
    for (long r : or_default(cfg.r, {0, 1})) {
      if (m < 1) throw UsageError("quad needs m >= 1");
      if (r < 0 || r > kMaxIntegralR) {
        throw UsageError("r=" + std::to_string(r) + " exceeds the cap max-integral-r=" +
                         std::to_string(kMaxIntegralR));
      }
      for (long x0 : or_default(cfg.x, {1, 2})) {
        for (long l0 : or_default(cfg.lambda, {1, 2})) {
          for (int n = 0; n <= n_max; ++n) {
            const bool is_bell = l0 == 1;
            const auto q = dowling_integral(n, static_cast<double>(x0), static_cast<double>(l0), m, r);
            const double exact = dowling_poly(n, {m, r, 0}).poly.eval(x0, l0).get_d();
            const double rel = relative_error(q.value, exact);
            if (rel > 1e-7) ok = false;
            t.rows.push_back({is_bell ? "bell" : "dowling", "", std::to_string(n),
                              std::to_string(x0), std::to_string(l0), std::to_string(m),
                              std::to_string(r), fmt_double(q.value), fmt_double(exact),
                              fmt_double(rel), fmt_double(q.est_abs_error),
                              std::to_string(q.nodes_used)});
          }
        }
      }
    }
  }
  std::vector<Adjudication> adj;
  adj.push_back(adjudicate_integrands(n_max));
  return {render(t, format_or(cfg, Format::Csv), "quad", adj), ok ? 0 : 1};
}

CommandOutput run_oracle_diff(const RunConfig& cfg) {
  const int n_max = n_max_or(cfg, 6, oracle::kMaxColoredN, "kMaxColoredN");
  Table t;
  t.headers = {"family", "params", "n", "k", "algebra", "oracle", "diff"};
  long nonzero = 0;
  auto row = [&](const std::string& fam, const std::string& params, int n, const std::string& k,
                 const Integer& alg, const Integer& orc) {
    const Integer d = alg - orc;
    if (d != 0) ++nonzero;
    t.rows.push_back({fam, params, std::to_string(n), k, alg.get_str(), orc.get_str(), d.get_str()});
  };

  const auto s2 = gstirling_table({0, 1, 0}, n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      row("stirling2", "alpha=0,beta=1,r=0", n, std::to_string(k), s2.at(n, k),
          oracle::count_set_partitions(n, k));
    }
  }
  const auto betas = or_default(cfg.m, {1, 2, 3});
  const auto rs = or_default(cfg.r, {0, 1, 2});
  for (long b : betas) {
    for (long r : rs) {
      if (b < 1 || r < 0 || r > oracle::kMaxColoredR) {
        throw UsageError("oracle-diff needs m >= 1 and 0 <= r <= kMaxColoredR=" +
                         std::to_string(oracle::kMaxColoredR));
      }
      const std::string p = "beta=" + std::to_string(b) + ",r=" + std::to_string(r);
      for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
          row("r-whitney", p, n, std::to_string(k),
              special_case(SpecialKind::RWhitney, n, k, {0, b, r}),
              oracle::count_rwhitney(n, k, b, r).value);
        }
      }
    }
  }
  for (long m : betas) {
    for (long r : rs) {
      const DowlingParams dp{m, r, 0};
      for (long x0 : or_default(cfg.x, {1, 2, 3})) {
        for (long l0 : or_default(cfg.lambda, {1, 2, 3})) {
          if (x0 < 1 || l0 < 1) throw UsageError("oracle-diff needs x >= 1 and lambda >= 1");
          const std::string p = "m=" + std::to_string(m) + ",r=" + std::to_string(r) +
                                ",x=" + std::to_string(x0) + ",l=" + std::to_string(l0);
          for (int n = 0; n <= n_max; ++n) {
            row("r-dowling", p, n, "", dowling_poly(n, dp).poly.eval(x0, l0),
                oracle::count_rmxl(n, m, r, x0, l0).value);
          }
        }
      }
    }
  }
  for (int l = 0; l <= oracle::kMaxBpaBars; ++l) {
    for (int n = 0; n <= std::min(n_max, oracle::kMaxBpaN); ++n) {
      row("bpa", "l=" + std::to_string(l), n, "", bpa_egf_coefficient(n, l),
          oracle::enum_bpa_count(n, l));
    }
  }
  return {render(t, format_or(cfg, Format::Csv), "oracle-diff"), nonzero == 0 ? 0 : 1};
}

CommandOutput run(const RunConfig& cfg) {
  if (cfg.command == "table") return run_table(cfg);
  if (cfg.command == "check") return run_check(cfg);
  if (cfg.command == "asymptotic") return run_asymptotic(cfg);
  if (cfg.command == "quad") return run_quad(cfg);
  if (cfg.command == "oracle-diff") return run_oracle_diff(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace dowling::cli
