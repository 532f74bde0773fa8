// e6: command-line front end. Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <e6dirac/verify.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace e6;
using nlohmann::json;

namespace {

enum class Mode { text, json, tsv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Flat rendering: one line per key; arrays of records become one line each.
void render(const json& out, Mode mode, std::ostream& os) {
  if (mode == Mode::json) {
    os << out.dump(2) << "\n";
    return;
  }
  const std::string sep = mode == Mode::tsv ? "\t" : ": ";
  for (const auto& [key, v] : out.items()) {
    if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      for (const auto& e : v) {
        os << key;
        if (e.is_object()) {
          for (const auto& [k2, v2] : e.items()) os << (mode == Mode::tsv ? "\t" : "  ") << (mode == Mode::tsv ? "" : k2 + "=") << scalar(v2);
        } else {
          for (const auto& v2 : e) os << (mode == Mode::tsv ? "\t" : "  ") << scalar(v2);
        }
        os << "\n";
      }
    } else if (v.is_array()) {
      os << key << sep;
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? (mode == Mode::tsv ? "\t" : " ") : "") << scalar(v[i]);
      os << "\n";
    } else {
      os << key << sep << scalar(v) << "\n";
    }
  }
}

std::string str(const Rational& r) { return to_string(r); }

KTypeWeight ktype_arg(const std::string& s) {
  KTypeWeight mu;
  try {
    mu = parse_ktype(s);
  } catch (const std::exception& e) {
    throw UsageError("cannot parse K-type \"" + s + "\": " + e.what());
  }
  if (!is_ktype_weight(mu)) throw UsageError(to_string(mu) + " is not a K-type highest weight");
  return mu;
}

InfChar infchar_arg(const std::string& s) {
  try {
    return parse_infchar(s);
  } catch (const std::exception& e) {
    throw UsageError("cannot parse infinitesimal character \"" + s + "\": " + e.what());
  }
}

json cmd_datum() {
  const auto& d = e6_datum();
  json out;
  out["roots"] = d.all_roots.size();
  out["positive_roots"] = d.positive_roots.size();
  out["compact_positive"] = d.compact_positive.size();
  out["noncompact_positive"] = d.noncompact_positive.size();
  out["rho"] = to_string(d.rho);
  out["rho_c"] = to_string(d.rho_c);
  out["rho_n"] = to_string(d.rho_n);
  out["zeta"] = to_string(d.zeta);
  out["rho_norm_sq"] = str(norm_sq(d.rho));
  out["rho_c_norm_sq"] = str(norm_sq(d.rho_c));
  out["weyl_order"] = generate_group(d, simple_indices(RootSystem::full)).size();
  out["weyl_k_order"] = generate_group(d, simple_indices(RootSystem::compact)).size();
  const auto& reps = e6_coset_reps();
  out["coset_reps"] = reps.size();
  json shifts = json::array();
  for (std::size_t j = 0; j < reps.size(); ++j)
    shifts.push_back({{"j", j}, {"length", reps[j].w.word() ? reps[j].w.word()->size() : 0}, {"rho_n_shift", to_string(reps[j].rho_n_shift)}});
  out["rho_n_j"] = shifts;
  return out;
}

json cmd_spin_norm(const std::string& arg) {
  const auto mu = ktype_arg(arg);
  const auto res = spin_norm(mu);
  json out;
  out["mu"] = to_string(mu);
  out["norm_sq"] = str(res.norm_sq);
  out["argmin_j"] = res.argmin_js;
  json shifts = json::array();
  for (std::size_t i = 0; i < res.dominant_shifts.size(); ++i) {
    const auto& s = res.dominant_shifts[i];
    shifts.push_back({{"j", res.argmin_js[i]}, {"shift", to_string(s)}, {"zeta", bracket(e6_datum().zeta_coords(s))}});
  }
  out["minimizing_shifts"] = shifts;
  return out;
}

json cmd_lambda(const std::string& arg) {
  const auto mu = ktype_arg(arg);
  const auto res = lambda_stats(mu);
  return {{"mu", to_string(mu)}, {"lambda_a", to_string(res.lambda_a)}, {"norm_sq", str(res.norm_sq)}, {"height", res.height}};
}

json cmd_usmall(bool count_only, const std::string& check) {
  json out;
  if (!check.empty()) {
    const auto mu = ktype_arg(check);
    out["mu"] = to_string(mu);
    out["usmall"] = is_usmall(mu);
    return out;
  }
  const auto all = enumerate_usmall();
  out["count"] = all.size();
  if (!count_only) {
    json list = json::array();
    for (const auto& mu : all) list.push_back(json::array({to_string(mu)}));
    out["ktype"] = list;
  }
  return out;
}

json cmd_omega(const std::string& involutions, bool report) {
  const auto& d = e6_datum();
  const auto thetas = load_involutions(involutions);
  const auto omega = build_omega(d, thetas);
  const auto omega2 = build_omega2();
  const auto v = minimal_elements(omega2);
  json out;
  out["involutions"] = thetas.size();
  out["omega"] = omega.size();
  out["omega2"] = omega2.size();
  out["omega2_subset"] = std::includes(omega.begin(), omega.end(), omega2.begin(), omega2.end());
  json vs = json::array();
  for (const auto& l : v) vs.push_back(to_string(l));
  out["V"] = vs;
  if (!out["omega2_subset"].get<bool>()) return out;
  const auto p = partition_omega(omega, omega2, v);
  out["omega1"] = p.omega1.size();
  out["omega3"] = p.omega3.size();
  if (report) {
    json members = json::array();
    for (const auto& [name, set] : {std::pair{"omega1", &p.omega1}, {"omega2", &p.omega2}, {"omega3", &p.omega3}})
      for (const auto& l : *set) members.push_back(json::array({name, to_string(l)}));
    out["member"] = members;
  }
  return out;
}

json cmd_dirac(const std::string& branch, const std::string& infchar) {
  const auto b = load_branch(branch);
  const auto l = infchar_arg(infchar);
  const auto lowest = spin_lowest(b);
  const auto hd = dirac_cohomology(b, l);
  json out;
  out["infchar"] = to_string(l);
  out["infchar_norm_sq"] = str(norm_sq(e6_datum(), l));
  out["spin_lowest_norm_sq"] = str(lowest.spin_sq);
  json sl = json::array();
  for (const auto& mu : lowest.ktypes) sl.push_back(to_string(mu));
  out["spin_lowest"] = sl;
  json support = json::array();
  json mult = json::array();
  for (const auto& [g, m] : hd.with_multiplicity) {
    support.push_back(to_string(g));
    mult.push_back(json::array({to_string(g), m}));
  }
  out["hd_support"] = support;
  out["hd_multiplicity"] = mult;
  return out;
}

struct VerifyOptions {
  std::string which = "all";
  std::string fixtures;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

json cmd_verify(const VerifyOptions& o, bool& ok) {
  const std::filesystem::path dir = o.fixtures.empty() ? fixture_dir() : std::filesystem::path(o.fixtures);
  const bool all = o.which == "all";
  json out;
  ok = true;
  if (all || o.which == "scattered") {
    const auto rows = load_scattered(dir / "scattered.tsv");
    const auto thetas = load_involutions(dir / "kgb_involutions.json");
    json lines = json::array();
    std::size_t pass = 0;
    for (const auto& r : verify_scattered_table(rows, thetas)) {
      pass += r.ok();
      lines.push_back(json::array({r.x, to_string(r.infchar), str(r.infchar_sq), to_string(r.a), to_string(r.b), to_string(r.c),
                                   to_string(r.d), to_string(r.e), r.detail}));
    }
    out["scattered_row"] = lines;
    out["scattered_pass"] = std::to_string(pass) + "/" + std::to_string(rows.size());
    ok = ok && pass == rows.size();
  }
  if (all) {
    const auto rows = load_integral(dir / "fs_integral.tsv");
    const auto thetas = load_involutions(dir / "kgb_involutions.json");
    std::size_t pass = 0;
    for (const auto& r : verify_integral_table(rows, thetas))
      pass += r.nu_consistent == Check::pass && r.parameter == Check::pass && r.below_rho_c;
    out["integral_pass"] = std::to_string(pass) + "/" + std::to_string(rows.size());
    ok = ok && pass == rows.size();
    const auto audit = audit_conjecture(load_scattered(dir / "scattered.tsv"), rows);
    out["conjecture_audit"] = std::to_string(audit.checked - audit.violations.size()) + "/" + std::to_string(audit.checked);
    ok = ok && audit.violations.empty();
  }
  if (all || o.which == "tempered") {
    const auto rows = load_tempered(dir / "tempered.rows");
    json lines = json::array();
    std::size_t pass = 0;
    for (const auto& r : verify_tempered_rows(rows, o.samples, o.seed)) {
      pass += r.ok();
      lines.push_back(json::array({r.x, r.accepted, r.skipped, r.failures, r.unsatisfiable ? "unsatisfiable" : "", r.first_failure}));
    }
    out["tempered_row"] = lines;
    out["tempered_pass"] = std::to_string(pass) + "/" + std::to_string(rows.size());
    ok = ok && pass == rows.size();
  }
  if (all || o.which == "failure") {
    const auto rep = verify_failure_case(load_failure(dir / "failure_0011117.json"));
    json lines = json::array();
    for (const auto& e : rep.entries) lines.push_back(json::array({to_string(e.mu), str(e.spin_sq), str(e.margin)}));
    out["failure_lkt"] = lines;
    out["failure_infchar_norm_sq"] = str(rep.infchar_sq);
    out["failure_strict"] = std::to_string(rep.strict) + "/" + std::to_string(rep.entries.size());
    if (rep.vacuous) out["warning"] = "no LKTs listed; vacuous pass";
    ok = ok && rep.ok();
  }
  out["result"] = ok ? "pass" : "fail";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E6(-14) Dirac series toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, as_tsv = false;
  auto* jf = app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--tsv", as_tsv, "tab-separated output")->excludes(jf);

  auto* datum = app.add_subcommand("datum", "structure constants of the root datum");

  std::string mu_arg;
  auto* spin = app.add_subcommand("spin-norm", "spin norm of a K-type [a,b,c,d,e,f]");
  spin->add_option("mu", mu_arg, "K-type highest weight")->required();

  auto* lambda = app.add_subcommand("lambda", "lambda_a, its squared norm and the atlas height");
  lambda->add_option("mu", mu_arg, "K-type highest weight")->required();

  bool count_only = false;
  std::string check;
  auto* usmall = app.add_subcommand("usmall", "u-small K-types");
  usmall->add_flag("--count", count_only, "print only the number of u-small K-types");
  usmall->add_option("--check", check, "test a single K-type");

  std::string involutions;
  bool report = false;
  auto* omega = app.add_subcommand("omega", "the candidate sets Omega, Omega1, Omega2, Omega3 and V");
  omega->add_option("--involutions", involutions, "involution fixture (JSON)");
  omega->add_flag("--report", report, "also list every member with its part");

  std::string branch, infchar;
  auto* dirac = app.add_subcommand("dirac", "Dirac cohomology from a branching");
  dirac->add_option("--branch", branch, "branch file (JSON)")->required();
  dirac->add_option("--infchar", infchar, "infinitesimal character [a,b,c,d,e,f]")->required();

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check the tables against the engine");
  verify->add_option("what", vo.which, "scattered | tempered | failure | all")
      ->check(CLI::IsMember({"scattered", "tempered", "failure", "all"}));
  verify->add_option("--fixtures", vo.fixtures, "fixture directory (default: $E6_FIXTURE_DIR or the built-in path)");
  verify->add_option("--samples", vo.samples, "samples per tempered row")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vo.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "e6: " << e.what() << "\n" << app.help();
    return 2;
  }

  const Mode mode = as_json ? Mode::json : as_tsv ? Mode::tsv : Mode::text;
  try {
    json out;
    bool ok = true;
    if (datum->parsed()) out = cmd_datum();
    else if (spin->parsed()) out = cmd_spin_norm(mu_arg);
    else if (lambda->parsed()) out = cmd_lambda(mu_arg);
    else if (usmall->parsed()) out = cmd_usmall(count_only, check);
    else if (omega->parsed()) out = cmd_omega(involutions.empty() ? (fixture_dir() / "kgb_involutions.json").string() : involutions, report);
    else if (dirac->parsed()) out = cmd_dirac(branch, infchar);
    else if (verify->parsed()) out = cmd_verify(vo, ok);
    render(out, mode, std::cout);
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "e6: " << e.what() << "\n";
    return 2;
  } catch (const FixtureError& e) {
    std::cerr << "e6: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "e6: " << e.what() << "\n";
    return 1;
  }
}
