#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modlie/scenarios.hpp"

namespace modlie {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitCap = 3 };

struct CliEnvironment {
  /// Oracle JSON used by verify-paper unless --oracles is given.
  std::string embedded_oracles = "{}";
};

namespace cli_detail {

/// `-` reads the provided stdin stream.
inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline json report_header(const std::string& command, std::string_view input) {
  return {{"tool", "modlie"}, {"version", std::string(kToolVersion)}, {"command", command},
          {"input_digest", fnv1a_digest(input)}};
}

inline std::vector<std::size_t> dims_of(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

inline std::string join_dims(const std::vector<std::size_t>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? " > " : "") + std::to_string(dims[i]);
  return out;
}

inline std::string span_text(const LieAlgebra& L, const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "<";
  const auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? ", " : "") + format_combination(L, basis[i]);
  return out + ">";
}

inline json span_json(const LieAlgebra& L, const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(format_combination(L, v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

inline int analyze(const std::string& text, bool as_json, std::uint64_t cap, std::ostream& out) {
  const AlgebraFile file = parse_algebra_file(text);
  const LieAlgebra& L = file.algebra;
  json r = report_header("analyze", text);
  r["algebra"] = file.name;
  r["field"] = L.field().name();
  r["dim"] = L.dim();
  r["labels"] = L.labels();
  const auto derived = dims_of(derived_series(L));
  const auto lower = dims_of(lower_central_series(L));
  r["derived_series_dims"] = derived;
  r["lower_central_series_dims"] = lower;
  r["solvable"] = is_solvable(L);
  r["nilpotent"] = is_nilpotent(L);
  r["abelian"] = is_abelian(L);
  r["center"] = span_json(L, center(L));
  const BilinearForm kf = killing_form(L);
  r["killing_gram"] = kf.gram.to_string();
  r["killing_nondegenerate"] = is_nondegenerate(kf);
  r["killing_radical"] = span_json(L, killing_radical(kf));

  bool capped = false;
  if (L.field().is_prime()) {
    try {
      json list = json::array();
      for (const auto& I : ideals(L, cap)) list.push_back(span_json(L, I));
      r["ideals"] = list;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      r["ideals"] = "skipped: CapExceeded";
    }
  } else {
    r["ideals"] = "skipped: field is infinite";
  }
  try {
    const Subspace rad = radical(L, cap);
    r["radical"] = span_json(L, rad);
    r["semisimple"] = rad.is_zero();
    r["simple"] = L.field().is_prime() ? json(is_simple(L, cap)) : json("unknown over Q");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    capped = true;
    r["radical"] = "skipped: CapExceeded";
  }
  r["status"] = capped ? "skip" : "pass";

  if (as_json) {
    out << r.dump(2) << "\n";
  } else {
    out << "algebra " << file.name << " over " << L.field().name() << ", dim " << L.dim() << "\n";
    out << "derived series dims: " << join_dims(derived) << "\n";
    out << "lower central series dims: " << join_dims(lower) << "\n";
    out << "solvable: " << (is_solvable(L) ? "yes" : "no") << "\n";
    out << "nilpotent: " << (is_nilpotent(L) ? "yes" : "no") << "\n";
    out << "center: " << span_text(L, center(L)) << "\n";
    out << "killing gram: " << kf.gram.to_string() << "\n";
    out << "killing form: " << (is_nondegenerate(kf) ? "non-degenerate" : "degenerate") << "\n";
    if (r["ideals"].is_array()) out << "ideals: " << r["ideals"].size() << "\n";
    if (!capped) {
      out << "radical: " << span_text(L, radical(L, cap)) << "\n";
      if (r["simple"].is_boolean()) out << "simple: " << (r["simple"].get<bool>() ? "yes" : "no") << "\n";
    } else {
      out << "radical: skipped (CapExceeded)\n";
    }
  }
  return capped ? kExitCap : kExitPass;
}

inline int pmap(const std::string& text, bool as_json, std::ostream& out) {
  const AlgebraFile file = parse_algebra_file(text);
  const LieAlgebra& L = file.algebra;
  const PMappingSearch search = find_p_mapping(L);
  json r = report_header("pmap", text);
  r["algebra"] = file.name;
  r["field"] = L.field().name();
  int code = kExitPass;
  if (!search.mapping) {
    const std::string& label = L.labels()[*search.failing_basis];
    r["restrictable"] = false;
    r["certificate"] = {{"basis_element", label}, {"ad_power", search.unmatched->to_string()}};
    r["status"] = "fail";
    code = kExitFail;
    if (!as_json) {
      out << "no p-mapping: (ad " << label << ")^" << L.field().characteristic() << " = "
          << search.unmatched->to_string() << " is not ad of any element\n";
      out << "certificate: " << label << "\n";
    }
  } else {
    const PMapping& pm = *search.mapping;
    const PMappingReport report = verify_p_mapping(pm);
    const SolutionSpaceReport space = p_mapping_solution_space(L);
    r["restrictable"] = true;
    r["images"] = scenario::images_json(pm);
    r["axioms"] = {{"axiom1", report.axiom1}, {"axiom2", report.axiom2}, {"axiom3", report.axiom3}};
    if (!report.ok()) r["first_violation"] = report.first_violation;
    r["solution_space"] = {{"center_dim", space.center_dim},
                           {"unique", space.unique},
                           {"killing_nondegenerate", space.killing_nondegenerate},
                           {"consistent", space.consistent}};
    const bool ok = report.ok() && space.consistent;
    r["status"] = ok ? "pass" : "fail";
    code = ok ? kExitPass : kExitFail;
    if (!as_json) {
      for (std::size_t j = 0; j < L.dim(); ++j) {
        out << L.labels()[j] << "^[p] = " << format_combination(L, pm.basis_images[j]) << "\n";
      }
      out << "axioms: " << (report.ok() ? "ok" : "violated (" + report.first_violation + ")") << "\n";
      out << "solutions: p-mapping + center, center dim " << space.center_dim
          << (space.unique ? " (unique)" : " (not unique)") << "\n";
    }
  }
  if (as_json) out << r.dump(2) << "\n";
  return code;
}

inline int rep(const std::string& text, const std::string& mats_text, bool as_json, std::uint64_t cap,
               std::ostream& out) {
  const AlgebraFile file = parse_algebra_file(text);
  const LieAlgebra& L = file.algebra;
  json r = report_header("rep", text + "\n" + mats_text);
  r["algebra"] = file.name;
  std::vector<Matrix> mats = parse_matrix_list(mats_text, L);
  try {
    const Representation R = check_representation(L, std::move(mats));
    r["valid"] = true;
    r["module_dim"] = R.module_dim();
    bool capped = false;
    try {
      const auto inv = invariant_subspaces(R, cap);
      json list = json::array();
      for (const auto& s : inv) list.push_back(subspace_json(s));
      r["invariant_subspaces"] = list;
      r["completely_reducible"] = is_completely_reducible(R, cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      capped = true;
      r["invariant_subspaces"] = "skipped: CapExceeded";
    }
    r["status"] = capped ? "skip" : "pass";
    if (as_json) {
      out << r.dump(2) << "\n";
    } else {
      out << "representation of " << file.name << " on " << L.field().name() << "^" << R.module_dim() << ": valid\n";
      if (capped) {
        out << "invariant subspaces: skipped (CapExceeded)\n";
      } else {
        out << "invariant subspaces: " << r["invariant_subspaces"].size() << "\n";
        for (const auto& s : r["invariant_subspaces"]) out << "  dim " << s["dim"] << ": " << s["basis"].dump() << "\n";
        out << "completely reducible: " << (r["completely_reducible"].get<bool>() ? "yes" : "no") << "\n";
      }
    }
    return capped ? kExitCap : kExitPass;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HomomorphismViolation && e.kind() != ErrorKind::DimensionMismatch) throw;
    r["valid"] = false;
    r["violation"] = e.what();
    r["status"] = "fail";
    if (as_json) {
      out << r.dump(2) << "\n";
    } else {
      out << "not a representation: " << e.what() << "\n";
    }
    return kExitFail;
  }
}

inline int verify_paper(const std::vector<std::string>& filter, bool as_json, std::uint64_t cap,
                        const std::string& oracle_text, const std::string& regen_path, std::ostream& out,
                        std::ostream& err) {
  for (const auto& id : filter) {
    const auto ids = scenario_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      err << "error: unknown scenario '" << id << "'\n";
      return kExitUsage;
    }
  }
  ScenarioOptions opts;
  opts.cap = cap;
  try {
    opts.oracles = json::parse(oracle_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("oracle file: ") + e.what());
  }
  json regenerated = json::object();
  if (!regen_path.empty()) opts.regenerate = &regenerated;

  const auto results = verify_paper_scenarios(opts, filter);
  bool any_fail = false;
  bool any_skip = false;
  json checks = json::array();
  for (const auto& res : results) {
    any_fail = any_fail || res.status == "fail";
    any_skip = any_skip || res.status == "skip";
    checks.push_back(scenario_json(res));
  }
  const std::string status = any_fail ? "fail" : (any_skip ? "skip" : "pass");

  if (!regen_path.empty()) {
    std::ofstream file(regen_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + regen_path + "'");
    file << regenerated.dump(2) << "\n";
    err << "wrote oracles for " << regenerated.size() << " scenarios to " << regen_path << "\n";
  }

  if (as_json) {
    json r = report_header("verify-paper", oracle_text);
    r["checks"] = checks;
    r["status"] = status;
    out << r.dump(2) << "\n";
  } else {
    for (const auto& res : results) {
      out << "[" << (res.status == "pass" ? "PASS" : res.status == "fail" ? "FAIL" : "SKIP") << "] " << res.id;
      if (res.status == "skip") out << " (" << res.data.value("reason", "") << ")";
      out << "\n";
      if (res.status == "fail" && res.data.contains("checks")) {
        for (const auto& [name, ok] : res.data["checks"].items()) {
          if (!ok.get<bool>()) out << "    failed: " << name << "\n";
        }
        if (res.data.value("oracle", "") == "mismatch" || res.data.value("oracle", "") == "missing") {
          out << "    derived output " << res.data["oracle"].get<std::string>() << " against oracle: "
              << res.data["derived"].dump() << "\n";
        }
      }
      if (res.status == "fail" && res.data.contains("message")) out << "    " << res.data["message"] << "\n";
    }
  }
  return any_fail ? kExitFail : (any_skip ? kExitCap : kExitPass);
}

}  // namespace cli_detail

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
                   const CliEnvironment& env = {}) {
  CLI::App app{"Exact computations with Lie algebras over F_p and Q", "modlie"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string file;
  std::string mats;
  bool as_json = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t p = 0;
  std::size_t n = 2;
  bool emit = false;
  std::string name;
  std::vector<std::string> scenarios;
  std::string oracle_path;
  std::string regen_path;

  auto* check = app.add_subcommand("check", "parse and validate an algebra file");
  check->add_option("file", file, "algebra file, or - for stdin")->required();

  auto* analyze = app.add_subcommand("analyze", "structure report for an algebra");
  analyze->add_option("file", file, "algebra file, or - for stdin")->required();
  analyze->add_flag("--json", as_json, "JSON output");
  analyze->add_option("--cap", cap, "subspace enumeration cap");

  auto* pmap = app.add_subcommand("pmap", "search for and verify a p-mapping");
  pmap->add_option("file", file, "algebra file, or - for stdin")->required();
  pmap->add_flag("--json", as_json, "JSON output");

  auto* rep = app.add_subcommand("rep", "check a representation and its invariant subspaces");
  rep->add_option("file", file, "algebra file, or - for stdin")->required();
  rep->add_option("--mats", mats, "matrix list, one [[..],[..]] per basis element")->required();
  rep->add_flag("--json", as_json, "JSON output");
  rep->add_option("--cap", cap, "subspace enumeration cap");

  auto* builtin_cmd = app.add_subcommand("builtin", "print a catalog algebra");
  builtin_cmd->add_option("name", name, "gl, sl, sl2, heisenberg, aff2 or fsl2")->required();
  builtin_cmd->add_option("--p", p, "characteristic; omit for Q");
  builtin_cmd->add_option("--n", n, "matrix size for gl and sl");
  builtin_cmd->add_flag("--emit", emit, "print as an algebra file (default)");

  auto* verify = app.add_subcommand("verify-paper", "run the counterexample scenario suite");
  verify->add_option("--scenario", scenarios, "scenario id (repeatable)");
  verify->add_flag("--json", as_json, "JSON output");
  verify->add_option("--cap", cap, "subspace enumeration cap");
  verify->add_option("--oracles", oracle_path, "oracle file overriding the built-in one");
  verify->add_option("--regen-oracles", regen_path, "write derived outputs to this file");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) {
      const std::string text = cli_detail::read_input(file, in);
      try {
        const AlgebraFile af = parse_algebra_file(text);
        out << "ok: " << af.name << " (dim " << af.algebra.dim() << " over " << af.algebra.field().name() << ")\n";
        return kExitPass;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        out << "invalid: " << e.what() << "\n";
        return kExitFail;
      }
    }
    if (*analyze) return cli_detail::analyze(cli_detail::read_input(file, in), as_json, cap, out);
    if (*pmap) return cli_detail::pmap(cli_detail::read_input(file, in), as_json, out);
    if (*rep) {
      const std::string text = cli_detail::read_input(file, in);
      const std::string mats_text = cli_detail::read_input(mats, in);
      return cli_detail::rep(text, mats_text, as_json, cap, out);
    }
    if (*builtin_cmd) {
      const Field field = p == 0 ? Field::rationals() : Field::prime(p);
      if (name == "sl2" && p == 2) err << "warning: sl2 in characteristic 2 is not simple; see fsl2\n";
      out << emit_algebra_file(builtin(name, field, n), name);
      return kExitPass;
    }
    if (*verify) {
      const std::string oracles = oracle_path.empty() ? env.embedded_oracles : cli_detail::read_input(oracle_path, in);
      return cli_detail::verify_paper(scenarios, as_json, cap, oracles, regen_path, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::CapExceeded:
        return kExitCap;
      case ErrorKind::JacobiViolation:
      case ErrorKind::AntisymmetryViolation:
      case ErrorKind::HomomorphismViolation:
        return kExitFail;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace modlie
