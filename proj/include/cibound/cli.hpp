#pragma once

// Command-line front-end. Subcommands:
//   bounds      one certificate for a profile and scenario
//   table       family sweep (hypersurface families)
//   fano-lines  degree of the sliced Fano variety of lines on a cubic (27)
//   resolution  blow-up schedule for a p^m-cyclic-cover singularity
//   verify      self-verification suite
//
// Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cibound/bounds.hpp"
#include "cibound/report.hpp"

namespace cibound::cli {

namespace detail {

inline std::vector<int> parse_degrees(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const int d = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(d);
    } catch (const std::exception&) {
      throw input_error("bad degree list entry '" + item + "'");
    }
  }
  if (out.empty()) throw input_error("empty degree list");
  return out;
}

inline Scenario parse_scenario(const std::string& s) {
  if (s == "generic") return Scenario::Generic;
  if (s == "with-point") return Scenario::GenericWithPoint;
  if (s == "very-general") return Scenario::VeryGeneralChar0;
  throw input_error("unknown scenario '" + s + "' (expected generic, with-point or very-general)");
}

inline std::string render_plan_text(const resolution::ResolutionPlan& plan) {
  std::ostringstream out;
  out << "case " << resolution::to_string(plan.sing.tag) << ": p=" << plan.sing.p << " m=" << plan.sing.m
      << " n=" << plan.sing.n << ", " << plan.steps.size() << " blow-up(s)\n";
  for (const auto& s : plan.steps) {
    out << "  step " << s.index << ": exponent " << s.local_exponent << ", exceptional "
        << resolution::to_string(s.exceptional_type) << ", strict transform "
        << resolution::to_string(s.strict_transform_type);
    if (plan.sing.tag == resolution::CaseTag::P2OddN) out << ", group " << s.coordinate_change_tag;
    out << ", E' multiplicity " << plan.e_prime_multiplicities[s.index - 1] << "\n";
  }
  for (const auto& note : plan.notes) out << "  note: " << note << "\n";
  return out.str();
}

}  // namespace detail

/// Parses and runs one invocation; all output goes to the supplied streams.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certified torsion-order bounds for complete intersections"};
  app.require_subcommand(1);
  app.set_config("--config")->description("key=value file with the same flags; command line wins");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "certificate for one multi-degree profile");
  int b_n = 2;
  std::string b_degrees;
  std::string b_scenario = "generic";
  std::string b_format = "md";
  bounds_cmd->add_option("--n", b_n, "dimension of the complete intersection")->required();
  bounds_cmd->add_option("--degrees", b_degrees, "comma-separated degrees d_1,..,d_r")->required();
  bounds_cmd->add_option("--scenario", b_scenario, "generic | with-point | very-general");
  bounds_cmd->add_option("--format", b_format, "json | md | csv");

  // table
  auto* table_cmd = app.add_subcommand("table", "family sweep");
  std::string t_family = "hypersurface";
  int t_n_from = 0, t_n_to = -1;
  std::string t_rule = "n-plus-1";
  std::string t_scenario = "generic";
  std::string t_format = "md";
  table_cmd->add_option("--family", t_family, "hypersurface")->required();
  table_cmd->add_option("--n-from", t_n_from, "first dimension")->required();
  table_cmd->add_option("--n-to", t_n_to, "last dimension (inclusive)")->required();
  table_cmd->add_option("--degree-rule", t_rule, "n-plus-1 | fixed:<d>");
  table_cmd->add_option("--scenario", t_scenario, "generic | with-point | very-general");
  table_cmd->add_option("--format", t_format, "json | md | csv");

  // fano-lines
  auto* fano_cmd = app.add_subcommand("fano-lines", "degree of the sliced Fano variety of lines on a cubic");
  int f_n = 2;
  fano_cmd->add_option("--n", f_n, "dimension of the cubic hypersurface")->required();

  // resolution
  auto* res_cmd = app.add_subcommand("resolution", "blow-up schedule for a p^m-cyclic-cover singularity");
  int r_p = 2, r_m = 1, r_dim = 3;
  std::string r_format = "text";
  res_cmd->add_option("--p", r_p, "characteristic (prime)")->required();
  res_cmd->add_option("--m", r_m, "power of the cyclic cover")->required();
  res_cmd->add_option("--dim", r_dim, "dimension of the cover")->required();
  res_cmd->add_option("--format", r_format, "json | text");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suite");
  report::VerifyConfig vcfg;
  verify_cmd->add_option("--max-d", vcfg.max_d, "degree cap for exhaustive sweeps");
  verify_cmd->add_option("--max-r", vcfg.max_r, "codimension cap for exhaustive sweeps");
  verify_cmd->add_option("--max-m", vcfg.max_m, "exponent cap for resolution sweeps");
  verify_cmd->add_option("--inject-fault", vcfg.inject_fault, "force-fail the named check (self-test)")
      ->group("");  // hidden

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (bounds_cmd->parsed()) {
      const auto profile = MultiDegreeProfile::create(b_n, detail::parse_degrees(b_degrees));
      const auto cert = certificate(profile, detail::parse_scenario(b_scenario));
      const auto format = report::parse_format(b_format);
      if (format == report::Format::Json)
        out << report::certificate_to_json(cert).dump(2) << "\n";
      else
        out << report::render_rows({report::make_row(cert)}, format);
      return 0;
    }

    if (table_cmd->parsed()) {
      report::TableRequest req;
      if (t_family != "hypersurface")
        throw input_error("unknown family '" + t_family + "' (only hypersurface is available)");
      req.family = report::TableRequest::Family::Hypersurface;
      req.n_from = t_n_from;
      req.n_to = t_n_to;
      if (t_rule == "n-plus-1") {
        req.degree_rule = report::TableRequest::DegreeRule::NPlusOne;
      } else if (t_rule.rfind("fixed:", 0) == 0) {
        req.degree_rule = report::TableRequest::DegreeRule::Fixed;
        try {
          req.fixed_degree = std::stoi(t_rule.substr(6));
        } catch (const std::exception&) {
          throw input_error("bad degree rule '" + t_rule + "'");
        }
        if (req.fixed_degree < 1) throw input_error("fixed degree must be >= 1");
      } else {
        throw input_error("unknown degree rule '" + t_rule + "' (expected n-plus-1 or fixed:<d>)");
      }
      req.scenario = detail::parse_scenario(t_scenario);
      out << report::render_rows(report::emit_table(req), report::parse_format(t_format));
      return 0;
    }

    if (fano_cmd->parsed()) {
      out << schubert::fano_lines_degree(f_n).str() << "\n";
      return 0;
    }

    if (res_cmd->parsed()) {
      const auto plan = resolution::resolution_plan(r_p, r_m, r_dim);
      if (r_format == "json")
        out << report::plan_to_json(plan).dump(2) << "\n";
      else if (r_format == "text")
        out << detail::render_plan_text(plan);
      else
        throw input_error("unknown format '" + r_format + "' (expected json or text)");
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto result = report::verify_suite(vcfg);
      out << report::render_verification(result);
      return result.all_passed() ? 0 : 2;
    }
  } catch (const consistency_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace cibound::cli
