#pragma once

// Report assembly: certificate rows, family table sweeps, JSON/markdown/CSV
// rendering, and the self-verification suite that replays every
// oracle-vs-closed-form identity the library relies on.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cibound/bounds.hpp"
#include "cibound/lr_oracle.hpp"
#include "cibound/profile.hpp"
#include "cibound/resolution.hpp"
#include "cibound/schubert.hpp"

namespace cibound::report {

using nlohmann::json;

enum class Format { Json, Md, Csv };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "md") return Format::Md;
  if (s == "csv") return Format::Csv;
  throw input_error("unknown format '" + s + "' (expected json, md or csv)");
}

/// One table line summarizing a certificate. Big integers are carried as
/// decimal strings; an unknown multiple is the literal string "unknown".
struct ReportRow {
  int n = 1;
  int r = 1;
  std::vector<int> degrees;
  std::string scenario;
  std::string known_divisor;
  std::string known_multiple;
  bool exact = false;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  bool operator==(const ReportRow&) const = default;
};

inline ReportRow make_row(const TorsionCertificate& cert) {
  ReportRow row;
  row.n = cert.profile.n;
  row.r = cert.profile.r();
  row.degrees = cert.profile.degrees;
  row.scenario = to_string(cert.scenario);
  row.known_divisor = cert.known_divisor.str();
  row.known_multiple = cert.known_multiple ? cert.known_multiple->str() : "unknown";
  row.exact = cert.exact();
  for (const auto& w : cert.witnesses) row.witnesses.push_back(w.summary());
  row.notes = cert.notes;
  if (!cert.level_note.empty()) row.notes.push_back(cert.level_note);
  return row;
}

inline json row_to_json(const ReportRow& row) {
  return json{{"n", row.n},
              {"r", row.r},
              {"degrees", row.degrees},
              {"scenario", row.scenario},
              {"known_divisor", row.known_divisor},
              {"known_multiple", row.known_multiple},
              {"exact", row.exact},
              {"witnesses", row.witnesses},
              {"notes", row.notes}};
}

inline ReportRow row_from_json(const json& j) {
  ReportRow row;
  row.n = j.at("n").get<int>();
  row.r = j.at("r").get<int>();
  row.degrees = j.at("degrees").get<std::vector<int>>();
  row.scenario = j.at("scenario").get<std::string>();
  row.known_divisor = j.at("known_divisor").get<std::string>();
  row.known_multiple = j.at("known_multiple").get<std::string>();
  row.exact = j.at("exact").get<bool>();
  row.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  row.notes = j.at("notes").get<std::vector<std::string>>();
  return row;
}

/// Full-detail JSON for a single certificate (the `bounds` subcommand).
inline json certificate_to_json(const TorsionCertificate& cert) {
  json provenance = json::array();
  for (const auto& p : cert.provenance)
    provenance.push_back({{"rule", p.rule}, {"factor", p.factor.str()}, {"citation", p.citation}});
  json witnesses = json::array();
  for (const auto& w : cert.witnesses)
    witnesses.push_back({{"p", w.p},
                         {"m", w.m},
                         {"index", w.index},
                         {"a", w.a},
                         {"c", w.c},
                         {"rule", to_string(w.rule)}});
  return json{{"n", cert.profile.n},
              {"r", cert.profile.r()},
              {"degrees", cert.profile.degrees},
              {"normalized_degrees", cert.normalized.degrees},
              {"d_prime", cert.normalized.d_prime()},
              {"fano", cert.normalized.fano()},
              {"scenario", to_string(cert.scenario)},
              {"known_divisor", cert.known_divisor.str()},
              {"known_multiple", cert.known_multiple ? cert.known_multiple->str() : "unknown"},
              {"exact", cert.exact()},
              {"witnesses", witnesses},
              {"provenance", provenance},
              {"level_note", cert.level_note},
              {"notes", cert.notes}};
}

inline json plan_to_json(const resolution::ResolutionPlan& plan) {
  json steps = json::array();
  for (const auto& s : plan.steps) {
    json step{{"index", s.index},
              {"local_exponent", s.local_exponent},
              {"exceptional_type", resolution::to_string(s.exceptional_type)},
              {"strict_transform_type", resolution::to_string(s.strict_transform_type)}};
    if (plan.sing.tag == resolution::CaseTag::P2OddN) step["coordinate_change_tag"] = s.coordinate_change_tag;
    steps.push_back(step);
  }
  return json{{"p", plan.sing.p},
              {"m", plan.sing.m},
              {"n", plan.sing.n},
              {"case", resolution::to_string(plan.sing.tag)},
              {"blowup_count", plan.steps.size()},
              {"steps", steps},
              {"e_prime_multiplicities", plan.e_prime_multiplicities},
              {"group_sizes", plan.group_sizes},
              {"notes", plan.notes}};
}

namespace detail {
inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}
inline std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}
inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

inline std::string render_rows(const std::vector<ReportRow>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& row : rows) arr.push_back(row_to_json(row));
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      out << "n,r,degrees,scenario,known_divisor,known_multiple,exact,witnesses,notes\n";
      for (const auto& row : rows) {
        out << row.n << ',' << row.r << ',' << detail::csv_escape(detail::join_ints(row.degrees, ";")) << ','
            << row.scenario << ',' << row.known_divisor << ',' << row.known_multiple << ','
            << (row.exact ? "true" : "false") << ',' << detail::csv_escape(detail::join(row.witnesses, "; "))
            << ',' << detail::csv_escape(detail::join(row.notes, "; ")) << "\n";
      }
      break;
    }
    case Format::Md: {
      out << "| n | r | degrees | scenario | divisor | multiple | exact | witnesses | notes |\n";
      out << "|---|---|---------|----------|---------|----------|-------|-----------|-------|\n";
      for (const auto& row : rows) {
        out << "| " << row.n << " | " << row.r << " | " << detail::join_ints(row.degrees, ",") << " | "
            << row.scenario << " | " << row.known_divisor << " | " << row.known_multiple << " | "
            << (row.exact ? "yes" : "no") << " | " << detail::join(row.witnesses, "; ") << " | "
            << detail::join(row.notes, "; ") << " |\n";
      }
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Table sweeps
// ---------------------------------------------------------------------------

struct TableRequest {
  enum class Family { Hypersurface, Custom };
  enum class DegreeRule { NPlusOne, Fixed };

  Family family = Family::Hypersurface;
  int n_from = 2;
  int n_to = 1;  // empty range by default
  DegreeRule degree_rule = DegreeRule::NPlusOne;
  int fixed_degree = 2;
  Scenario scenario = Scenario::Generic;
  std::vector<MultiDegreeProfile> custom;  // Family::Custom rows
  std::size_t max_rows = 100'000;
  unsigned threads = 0;  // 0: pick from hardware
};

/// One row per profile, in deterministic order (the profile list order, which
/// is lexicographic in (n, degrees) for the hypersurface family). Rows may be
/// evaluated in parallel; assembly is positional, so the output does not
/// depend on the thread count.
inline std::vector<ReportRow> emit_table(const TableRequest& req) {
  std::vector<MultiDegreeProfile> profiles;
  if (req.family == TableRequest::Family::Hypersurface) {
    for (int n = req.n_from; n <= req.n_to; ++n) {
      const int d = req.degree_rule == TableRequest::DegreeRule::NPlusOne ? n + 1 : req.fixed_degree;
      profiles.push_back(MultiDegreeProfile::create(n, {d}));
      if (profiles.size() > req.max_rows)
        throw input_error("emit_table: row count exceeds guard " + std::to_string(req.max_rows));
    }
  } else {
    profiles = req.custom;
    if (profiles.size() > req.max_rows)
      throw input_error("emit_table: row count exceeds guard " + std::to_string(req.max_rows));
  }

  std::vector<ReportRow> rows(profiles.size());
  auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) rows[i] = make_row(certificate(profiles[i], req.scenario));
  };

  unsigned threads = req.threads ? req.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, 8));
  if (threads == 1 || profiles.size() < 64) {
    eval_range(0, profiles.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (profiles.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(profiles.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(eval_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------

struct VerifyConfig {
  int max_d = 6;          // degree cap for exhaustive sweeps
  int max_r = 3;          // codimension cap for exhaustive sweeps
  int max_m = 3;          // prime-power exponent cap for resolution sweeps
  int closed_form_max_d = 1000;
  int mutation_trials = 100;
  std::uint64_t oracle_guard = 1'000'000;
  std::uint32_t seed = 20011;
  std::string inject_fault;  // name of a check to force-fail (harness self-test)
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace detail {

/// All ordered degree lists with 1 <= r <= max_r, 1 <= d_i <= max_d.
inline std::vector<std::vector<int>> all_degree_lists(int max_r, int max_d) {
  std::vector<std::vector<int>> out;
  for (int r = 1; r <= max_r; ++r) {
    std::vector<int> degs(r, 1);
    for (;;) {
      out.push_back(degs);
      int k = 0;
      while (k < r && degs[k] == max_d) degs[k++] = 1;
      if (k == r) break;
      ++degs[k];
    }
  }
  return out;
}

/// Nondecreasing degree lists with every d_i in [2, max_d] and
/// sum (d_i - 1) = n (the extreme-case profiles of dimension n, normalized).
inline void extreme_profiles(int n, int max_d, std::vector<int>& acc,
                             std::vector<std::vector<int>>& out, int min_d = 2) {
  if (n == 0) {
    if (!acc.empty()) out.push_back(acc);
    return;
  }
  for (int d = min_d; d <= max_d && d - 1 <= n; ++d) {
    acc.push_back(d);
    extreme_profiles(n - (d - 1), max_d, acc, out, d);
    acc.pop_back();
  }
}

}  // namespace detail

/// Runs every oracle-vs-closed-form identity and structural sweep. Exit
/// status for the CLI: 2 if any check fails.
inline VerificationReport verify_suite(const VerifyConfig& cfg) {
  VerificationReport report;

  auto run = [&](const std::string& name, auto&& body) {
    CheckResult res;
    res.name = name;
    try {
      std::string detail;
      res.passed = body(detail);
      res.detail = detail;
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    if (cfg.inject_fault == name) {
      res.passed = false;
      res.detail = "injected fault (harness self-test)";
    }
    report.checks.push_back(std::move(res));
  };

  run("arith-lcm-closed-form", [&](std::string& detail) {
    for (int d = 1; d <= cfg.closed_form_max_d; ++d)
      if (lcm_factorial(d) != lcm_factorial_closed_form(d)) {
        detail = "mismatch at d=" + std::to_string(d);
        return false;
      }
    detail = "d <= " + std::to_string(cfg.closed_form_max_d);
    return true;
  });

  run("arith-product-lcm-oracle", [&](std::string& detail) {
    int lists = 0;
    for (const auto& degs : detail::all_degree_lists(cfg.max_r, cfg.max_d)) {
      if (lcm_factorial_product(degs) != product_lcm_oracle(degs, cfg.oracle_guard)) {
        detail = "mismatch for a degree list of length " + std::to_string(degs.size());
        return false;
      }
      ++lists;
    }
    detail = std::to_string(lists) + " degree lists";
    return true;
  });

  run("schubert-lr-oracle", [&](std::string& detail) {
    using namespace cibound::schubert;
    int pairs = 0;
    for (int m = 3; m <= 8; ++m) {
      for (int la = 0; la <= m - 2; ++la)
        for (int lb = 0; lb <= la; ++lb)
          for (int ma = 0; ma <= m - 2; ++ma)
            for (int mb = 0; mb <= ma; ++mb) {
              const auto lhs = multiply(SchubertClass::sigma(m, la, lb), SchubertClass::sigma(m, ma, mb));
              const auto rhs = lr_product_oracle(m, {la, lb}, {ma, mb});
              if (lhs != rhs) {
                detail = "mismatch on Gr(2," + std::to_string(m) + ")";
                return false;
              }
              ++pairs;
            }
    }
    detail = std::to_string(pairs) + " basis pairs, m <= 8";
    return true;
  });

  run("schubert-poincare-pairing", [&](std::string& detail) {
    using namespace cibound::schubert;
    for (int m = 3; m <= 8; ++m) {
      const int t = m - 2;
      for (int aa = 0; aa <= t; ++aa)
        for (int ab = 0; ab <= aa; ++ab)
          for (int ba = 0; ba <= t; ++ba)
            for (int bb = 0; bb <= ba; ++bb) {
              if (aa + ab + ba + bb != 2 * t) continue;
              const NatBig deg =
                  integrate(multiply(SchubertClass::sigma(m, aa, ab), SchubertClass::sigma(m, ba, bb)));
              const bool dual = (ba == t - ab && bb == t - aa);
              if (deg != (dual ? 1 : 0)) {
                detail = "pairing failure on Gr(2," + std::to_string(m) + ")";
                return false;
              }
            }
    }
    detail = "complementary pairings, m <= 8";
    return true;
  });

  run("schubert-chern-sym3", [&](std::string& detail) {
    using namespace cibound::schubert;
    SymmetricPoly2 expected;
    expected.add(0, 2, 9);
    expected.add(2, 1, 18);
    if (!(chern_sym3(4) == expected)) {
      detail = "c4 != 9*e2^2 + 18*e1^2*e2";
      return false;
    }
    if (!(chern_sym3(1) == SymmetricPoly2::term(1, 0, 6))) {
      detail = "c1 != 6*e1";
      return false;
    }
    // evaluation cross-check: at integer roots the class values must match
    // the elementary symmetric functions of {3x1, 2x1+x2, x1+2x2, 3x2}
    for (long long x1 = -3; x1 <= 3; ++x1)
      for (long long x2 = -3; x2 <= 3; ++x2) {
        const NatBig roots[4] = {3 * x1, 2 * x1 + x2, x1 + 2 * x2, 3 * x2};
        const NatBig e1 = x1 + x2, e2 = x1 * x2;
        NatBig esym[5] = {1, 0, 0, 0, 0};
        for (const NatBig& rt : roots)
          for (int k = 4; k >= 1; --k) esym[k] += esym[k - 1] * rt;
        for (int k = 1; k <= 4; ++k)
          if (chern_sym3(k).evaluate(e1, e2) != esym[k]) {
            detail = "evaluation mismatch for c" + std::to_string(k);
            return false;
          }
      }
    detail = "coefficient identity plus 49 evaluation points";
    return true;
  });

  run("schubert-fano-lines", [&](std::string& detail) {
    for (int n = 2; n <= 12; ++n)
      if (schubert::fano_lines_degree(n) != 27) {
        detail = "degree != 27 at n=" + std::to_string(n);
        return false;
      }
    detail = "27 for n = 2..12";
    return true;
  });

  run("bounds-totaro-threshold", [&](std::string& detail) {
    for (int n = 3; n <= 30; ++n)
      for (int d = 2; d <= n + 1; ++d) {
        const auto profile = MultiDegreeProfile::create(n, {d});
        const bool have = prime_power_witness(profile, 2, 1).has_value();
        const bool expect = d >= 2 * ((n + 2 + 2) / 3);  // 2 * ceil((n+2)/3)
        if (have != expect) {
          detail = "threshold mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d);
          return false;
        }
      }
    detail = "hypersurfaces, p=2, m=1, n <= 30";
    return true;
  });

  run("bounds-extreme-case", [&](std::string& detail) {
    for (int n = 3; n <= 12; ++n) {
      std::vector<std::vector<int>> profiles;
      std::vector<int> acc;
      detail::extreme_profiles(n, 8, acc, profiles);
      for (const auto& degs : profiles) {
        const auto profile = MultiDegreeProfile::create(n, degs);
        const NatBig divisor = very_general_lower_divisor(profile).divisor;
        for (int d : degs)
          if ((d % 2 == 1 || n % 2 == 0) && divisor % d != 0) {
            detail = "missing factor " + std::to_string(d) + " at n=" + std::to_string(n);
            return false;
          }
      }
    }
    detail = "extreme profiles, n <= 12, d <= 8";
    return true;
  });

  run("bounds-scenario-ordering", [&](std::string& detail) {
    for (const auto& degs : detail::all_degree_lists(cfg.max_r, cfg.max_d))
      for (int n = 1; n <= 8; ++n) {
        const auto profile = normalize(MultiDegreeProfile::create(n, degs));
        if (!profile.fano() || profile.is_projective_space()) continue;
        if (generic_with_point_lower_divisor(profile) * index_generic(profile) !=
            generic_lower_divisor(profile)) {
          detail = "ordering identity fails for " + profile.to_string();
          return false;
        }
      }
    detail = "with-point * index = generic, full sweep";
    return true;
  });

  run("bounds-certificate-consistency", [&](std::string& detail) {
    int count = 0;
    for (const auto& degs : detail::all_degree_lists(cfg.max_r, cfg.max_d))
      for (int n = 1; n <= 8; ++n) {
        const auto profile = MultiDegreeProfile::create(n, degs);
        for (Scenario sc : {Scenario::Generic, Scenario::GenericWithPoint, Scenario::VeryGeneralChar0}) {
          const auto cert = certificate(profile, sc);  // throws on inconsistency
          if (cert.known_multiple && *cert.known_multiple % cert.known_divisor != 0) {
            detail = "inconsistent certificate for " + profile.to_string();
            return false;
          }
          ++count;
        }
      }
    detail = std::to_string(count) + " certificates";
    return true;
  });

  run("resolution-counts", [&](std::string& detail) {
    using namespace cibound::resolution;
    for (int p : {2, 3, 5, 7})
      for (int m = 1; m <= cfg.max_m; ++m)
        for (int n = 2; n <= 8; ++n) {
          const auto plan = resolution_plan(p, m, n);
          if (static_cast<long long>(plan.steps.size()) != blowup_count(p, m, n)) {
            detail = "count mismatch at p=" + std::to_string(p) + " m=" + std::to_string(m);
            return false;
          }
          if (!verify_plan(plan)) {
            detail = "generated plan fails verify_plan at p=" + std::to_string(p) + " m=" + std::to_string(m) +
                     " n=" + std::to_string(n);
            return false;
          }
        }
    detail = "p in {2,3,5,7}, m <= " + std::to_string(cfg.max_m) + ", n <= 8";
    return true;
  });

  run("resolution-mutations", [&](std::string& detail) {
    using namespace cibound::resolution;
    std::mt19937 rng(cfg.seed);
    const int primes[4] = {2, 3, 5, 7};
    for (int trial = 0; trial < cfg.mutation_trials; ++trial) {
      const int p = primes[rng() % 4];
      const int m = 1 + static_cast<int>(rng() % std::max(1, cfg.max_m));
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto plan = resolution_plan(p, m, n);
      const auto mutation = random_single_field_mutation(plan, rng);
      if (verify_plan(mutation.plan)) {
        detail = "undetected mutation: " + mutation.description + " at p=" + std::to_string(p) +
                 " m=" + std::to_string(m) + " n=" + std::to_string(n);
        return false;
      }
    }
    detail = std::to_string(cfg.mutation_trials) + " random mutations all rejected";
    return true;
  });

  return report;
}

inline std::string render_verification(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  out << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace cibound::report
