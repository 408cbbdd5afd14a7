#include "gammalab/cli.hpp"

#include "gammalab/builtin_groups.hpp"
#include "gammalab/classify.hpp"
#include "gammalab/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>

#ifndef GAMMALAB_DATA_DIR
#define GAMMALAB_DATA_DIR "data"
#endif

namespace gammalab {

namespace {

using io::Json;
namespace fs = std::filesystem;

constexpr const char* kSchema = "gammalab/1";

struct Options {
  std::string format = "table";
  std::size_t budget = kDefaultHomologyBudget;
  int aut_cap = kDefaultAutomorphismCap;
  std::string data_dir = GAMMALAB_DATA_DIR;
};

/// What a command produced: a JSON result and the equivalent human-readable lines.
struct Report {
  Json result = Json::object();
  std::vector<std::pair<std::string, std::string>> rows;
  bool ok = true;

  void row(std::string key, std::string value) { rows.emplace_back(std::move(key), std::move(value)); }
};

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v(i));
  return s + ")";
}

std::string text(const AbelianPresentation& a) { return invariant_factors(a).to_string(); }

fs::path resolve(const std::string& arg, const std::string& kind, const Options& opt) {
  const fs::path p(arg);
  if (fs::is_regular_file(p)) return p;
  const fs::path dir = fs::path(opt.data_dir) / kind;
  for (const auto& candidate : {dir / arg, dir / (arg + ".json")})
    if (fs::is_regular_file(candidate)) return candidate;
  throw io::ParseError(arg + ": no such file (also looked in " + dir.string() + ")");
}

std::size_t budget_default() {
  const char* env = std::getenv("GAMMALAB_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultHomologyBudget;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0') throw io::ParseError(std::string("GAMMALAB_BUDGET: '") + env + "' is not a count");
  return static_cast<std::size_t>(v);
}

/// Group, character and (optionally) module named on the command line.
struct Job {
  io::GroupData group;
  OrientationChar w;
  std::optional<ZPiModule> module;
};

Job load_job(const Options& opt, const std::string& group, const std::string& character,
             const std::string& module) {
  auto g = io::load_group(resolve(group, "groups", opt));
  auto w = io::find_character(g, character);
  Job job{std::move(g), w, std::nullopt};
  if (!module.empty()) job.module = io::load_module(resolve(module, "modules", opt), job.group, job.w);
  return job;
}

ResolutionKind pick_resolution(const std::string& name, const FiniteGroup& g) {
  if (name == "bar") return ResolutionKind::Bar;
  if (name == "cyclic") return ResolutionKind::Cyclic;
  return cyclic_generator(g) ? ResolutionKind::Cyclic : ResolutionKind::Bar;
}

const char* resolution_name(ResolutionKind k) { return k == ResolutionKind::Bar ? "bar" : "cyclic"; }

Report cmd_gamma(const Options& opt, const std::string& file) {
  const auto a = io::load_presentation(resolve(file, "presentations", opt));
  const auto gg = gamma_presented(a);
  Report r;
  r.result["input"] = io::invariants_to_json(invariant_factors(a));
  r.result["gamma"] = io::invariants_to_json(invariant_factors(gg.presentation));
  r.row("A", text(a));
  r.row("Γ", text(gg.presentation));
  if (is_zero_matrix(a.relations())) {
    const auto names = gamma_generator_names(a.ngens());
    r.result["basis"] = names;
    std::string joined;
    for (const auto& n : names) joined += (joined.empty() ? "" : " ") + n;
    r.row("basis", joined.empty() ? "(empty)" : joined);
  }
  return r;
}

Report cmd_coinvariants(const Job& job, bool gamma) {
  const ZPiModule m = gamma ? gamma_module(*job.module) : *job.module;
  const auto c = twisted_coinvariants(m, job.w);
  const auto tors = torsion_part(c.group).first;
  Report r;
  r.result["character"] = job.w.name();
  r.result["of_gamma"] = gamma;
  r.result["module_rank"] = m.ngens();
  r.result["coinvariants"] = io::invariants_to_json(invariant_factors(c.group));
  r.result["torsion"] = io::invariants_to_json(invariant_factors(tors));
  r.row(gamma ? "Z^w ⊗ Γ(M)" : "Z^w ⊗ M", text(c.group));
  r.row("torsion", text(tors));
  return r;
}

Report cmd_tor1(const Job& job) {
  const auto t = tor_one(*job.module, job.w);
  Report r;
  r.result["character"] = job.w.name();
  r.result["tor1"] = io::invariants_to_json(invariant_factors(t));
  r.row("Tor_1(M, Z^w)", text(t));
  return r;
}

Json orbits_to_json(const HomologyOrbits& o) {
  Json orbits = Json::array();
  for (const auto& orbit : o.orbits) {
    Json members = Json::array();
    for (const auto& c : orbit) members.push_back(io::vector_to_json(c));
    orbits.push_back(members);
  }
  return orbits;
}

Report cmd_homology(const Options& opt, const Job& job, int degree, const std::string& resolution,
                    const std::string& resolution_file, bool orbits) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  const auto& g = job.group.group;
  Report r;
  r.result["character"] = job.w.name();
  r.result["degree"] = degree;
  const std::string label = "H_" + std::to_string(degree) + "(G; Z^w)";
  if (resolution == "file") {
    if (resolution_file.empty()) throw std::invalid_argument("--resolution file needs --resolution-file");
    if (orbits) throw std::invalid_argument("--orbits needs a built-in resolution (bar or cyclic)");
    const auto res = io::load_resolution(resolve(resolution_file, "resolutions", opt), g);
    if (degree >= res.length())
      throw std::invalid_argument("resolution has length " + std::to_string(res.length()) +
                                  "; degree " + std::to_string(degree) + " needs at least " +
                                  std::to_string(degree + 1));
    const auto h = group_homology(res, job.w, degree);
    r.result["resolution"] = "file";
    r.result["homology"] = io::invariants_to_json(invariant_factors(h.group));
    r.row("resolution", "file");
    r.row(label, text(h.group));
    return r;
  }
  const auto kind = pick_resolution(resolution, g);
  r.result["resolution"] = resolution_name(kind);
  r.row("resolution", resolution_name(kind));
  if (!orbits) {
    const auto h = group_homology(g, job.w, degree, kind, opt.budget);
    r.result["homology"] = io::invariants_to_json(invariant_factors(h.group));
    r.row(label, text(h.group));
    return r;
  }
  const auto o = orbit_quotient(g, job.w, degree, kind, std::nullopt, opt.budget, opt.aut_cap);
  r.result["homology"] = io::invariants_to_json(invariant_factors(o.homology.group));
  r.result["automorphisms"] = o.automorphism_count;
  r.result["orbit_count"] = o.orbits.size();
  r.result["orbits"] = orbits_to_json(o);
  r.row(label, text(o.homology.group));
  r.row("automorphisms preserving w", std::to_string(o.automorphism_count));
  r.row("orbits under ±Aut", std::to_string(o.orbits.size()));
  return r;
}

IntVector parse_class(const std::string& s) {
  std::vector<Integer> entries;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      entries.emplace_back(item);
    } catch (const std::exception&) {
      throw io::ParseError("--class '" + s + "': '" + item + "' is not an integer");
    }
  }
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
  return v;
}

Report cmd_orbit(const Options& opt, const Job& job, int degree, const std::string& resolution,
                 const std::vector<std::string>& classes) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  const auto& g = job.group.group;
  const auto kind = pick_resolution(resolution, g);
  std::optional<std::vector<IntVector>> list;
  if (!classes.empty()) {
    list.emplace();
    for (const auto& c : classes) list->push_back(parse_class(c));
  }
  const auto o = orbit_quotient(g, job.w, degree, kind, list, opt.budget, opt.aut_cap);
  Report r;
  r.result["character"] = job.w.name();
  r.result["degree"] = degree;
  r.result["resolution"] = resolution_name(kind);
  r.result["homology"] = io::invariants_to_json(invariant_factors(o.homology.group));
  r.result["automorphisms"] = o.automorphism_count;
  r.result["orbit_count"] = o.orbits.size();
  r.result["orbits"] = orbits_to_json(o);
  r.row("H_" + std::to_string(degree) + "(G; Z^w)", text(o.homology.group));
  r.row("automorphisms preserving w", std::to_string(o.automorphism_count));
  r.row("orbits under ±Aut", std::to_string(o.orbits.size()));
  for (std::size_t i = 0; i < o.orbits.size(); ++i) {
    std::string members;
    for (const auto& c : o.orbits[i]) members += (members.empty() ? "" : " ") + format_vector(c);
    r.row("orbit " + std::to_string(i + 1), members);
  }
  return r;
}

Report cmd_census(const Options& opt, const Job& job, const std::string& form_arg,
                  const std::optional<long long>& euler) {
  const auto form = io::load_form(resolve(form_arg, "forms", opt), *job.module, job.w);
  const QuadraticTwoType q(*job.module, form);
  const auto c = census(q);
  Report r;
  auto& j = r.result;
  j["character"] = job.w.name();
  j["group_order"] = c.group_order;
  j["pi2_rank"] = q.pi2().ngens();
  j["coinvariants"] = io::invariants_to_json(invariant_factors(c.coinvariants));
  j["torsion"] = io::invariants_to_json(invariant_factors(c.torsion));
  j["count"] = io::integer_to_json(c.count);
  j["lambda_gamma"] = io::vector_to_json(c.lambda_gamma);
  j["lambda_tensor_one"] = io::vector_to_json(c.lambda_tensor_one);
  j["primitive"] = c.primitive;
  j["kappa"] = c.kappa ? io::vector_to_json(*c.kappa) : Json(nullptr);
  j["kappa_hypotheses"] = c.kappa_hypotheses;
  j["norm_quotient"] = {{"value", io::invariants_to_json(c.norm_quotient)}, {"ok", c.norm_quotient_ok}};
  j["tor1_norm_quotient"] = {{"value", io::invariants_to_json(c.tor_one)}, {"ok", c.tor_one_ok}};

  r.row("group order", std::to_string(c.group_order));
  r.row("Z^w ⊗ Γ(π2)", text(c.coinvariants));
  r.row("torsion", text(c.torsion));
  r.row("count", to_string(c.count));
  r.row("λ ⊗ 1 (canonical)", format_vector(c.lambda_tensor_one));
  r.row("λ ⊗ 1 primitive", c.primitive ? "yes" : "no");
  r.row("κ splitting", c.kappa ? format_vector(*c.kappa) : "none");
  r.row("κ hypotheses", c.kappa_hypotheses ? "hold" : "do not hold");
  r.row("Zπ/N^w ⊗ Z^w", c.norm_quotient.to_string() + (c.norm_quotient_ok ? " (= Z/|G|)" : " (expected Z/|G|)"));
  r.row("Tor_1(Zπ/N^w, Z^w)", c.tor_one.to_string() + (c.tor_one_ok ? "" : " (expected 0)"));

  j["involution_rank"] = c.involution_rank;
  if (q.pi2().free_rank() >= 1) {
    const auto expected = invariant_factors(
        AbelianPresentation(c.involution_rank, IntMatrix::Identity(c.involution_rank, c.involution_rank) * Integer(2)));
    const bool holds = invariant_factors(c.torsion) == expected;
    j["involution_formula"] = {{"r", c.involution_rank}, {"holds", holds}};
    r.row("(Z/2)^r formula", "r = " + std::to_string(c.involution_rank) + (holds ? ", holds" : ", fails"));
  } else {
    r.row("involution rank r", std::to_string(c.involution_rank));
  }

  Json kj = Json::object();
  try {
    const auto k = kappa_diagnostics(q, euler ? std::optional<Integer>(*euler) : std::nullopt);
    kj["kappa1"] = k.kappa1 ? io::integer_to_json(*k.kappa1) : Json(nullptr);
    kj["kappa2"] = io::integer_to_json(k.kappa2);
    kj["rank"] = k.rank;
    kj["euler_rank"] = k.euler_rank ? io::integer_to_json(*k.euler_rank) : Json(nullptr);
    kj["tau"] = k.tau ? Json(*k.tau) : Json(nullptr);
    kj["tau_trace"] = k.tau_trace ? io::integer_to_json(*k.tau_trace) : Json(nullptr);
    kj["kappa3"] = k.kappa3 ? io::integer_to_json(*k.kappa3) : Json(nullptr);
    if (!k.kappa3_note.empty()) kj["kappa3_note"] = k.kappa3_note;
    r.row("κ1", k.kappa1 ? to_string(*k.kappa1) : "λ is not an N^w eigenvector");
    r.row("κ2 = tr κ'(λ)", to_string(k.kappa2) + " (rank " + std::to_string(k.rank) + ")");
    if (k.euler_rank) r.row("|G|χ - 2", to_string(*k.euler_rank));
    r.row("κ3", k.kappa3 ? to_string(*k.kappa3) + " (τ = " + job.group.group.label(*k.tau) + ")" : k.kappa3_note);
  } catch (const SingularFormError& e) {
    kj["error"] = e.what();
    r.row("κ diagnostics", e.what());
  }
  j["kappa_diagnostics"] = kj;
  return r;
}

struct Check {
  std::string description;
  std::string expected;
  std::function<std::string()> compute;
};

Report cmd_verify(const Options& opt) {
  const auto group = [&](const std::string& name) { return io::load_group(resolve(name, "groups", opt)); };
  const auto z2 = group("Z2");
  const auto w = io::find_character(z2, "w1");
  const auto module = [&](const std::string& name, const io::GroupData& g, const OrientationChar& c) {
    return io::load_module(resolve(name, "modules", opt), g, c);
  };
  const auto two_type = [&](const std::string& m, const std::string& f) {
    auto pi2 = module(m, z2, w);
    auto form = io::load_form(resolve(f, "forms", opt), pi2, w);
    return QuadraticTwoType(pi2, form);
  };

  std::vector<Check> checks;
  checks.push_back({"Γ of Z/2 is cyclic of order 4", "Z/4", [&] {
                      return text(gamma_presented(io::load_presentation(resolve("Z2", "presentations", opt))).presentation);
                    }});
  for (int n = 1; n <= 5; ++n)
    checks.push_back({"Γ of Z^" + std::to_string(n) + " is free of rank n(n+1)/2",
                      invariant_factors(AbelianPresentation::free(gamma_rank(n))).to_string(),
                      [n] { return text(gamma_presented(AbelianPresentation::free(n)).presentation); }});
  checks.push_back({"torsion of Z^w ⊗ Γ(Zπ) for π = Z/2, w nontrivial", "Z/2",
                    [&] { return text(obstruction_torsion(w, module("regular", z2, w))); }});
  checks.push_back({"Z^w ⊗ Γ(Z ⊕ Z^w) for π = Z/2, w nontrivial", "Z/2 + Z/2 + Z", [&] {
                      return text(twisted_coinvariants(gamma_module(module("z_plus_zw", z2, w)), w).group);
                    }});
  checks.push_back({"census count for π2 = Z ⊕ Z^w with the hyperbolic form", "4",
                    [&] { return to_string(census(two_type("z_plus_zw", "rp2_s2")).count); }});
  checks.push_back({"H_4 of the 2-type with π2 = Zπ, w nontrivial (cyclic provider)", "Z/2 + Z/2 + Z", [&] {
                      return text(h4_twotype_split(w, module("regular", z2, w), ResolutionKind::Cyclic, opt.budget).total);
                    }});
  checks.push_back({"H_4 of the 2-type with π2 = Zπ, w nontrivial (bar provider)", "Z/2 + Z/2 + Z", [&] {
                      return text(h4_twotype_split(w, module("regular", z2, w), ResolutionKind::Bar, opt.budget).total);
                    }});
  checks.push_back({"census count for π2 = Zπ with the form <1>", "2",
                    [&] { return to_string(census(two_type("regular", "rp4_cp2")).count); }});
  checks.push_back({"λ ⊗ 1 is not primitive for π2 = Zπ with the form <1>", "no",
                    [&] { return census(two_type("regular", "rp4_cp2")).primitive ? "yes" : "no"; }});

  for (const auto& ng : groups::small_groups()) {
    if (ng.group.order() > 8) continue;
    const auto g = group(ng.name);
    std::vector<OrientationChar> chars{OrientationChar::trivial(g.group)};
    chars.insert(chars.end(), g.characters.begin(), g.characters.end());
    for (const auto& c : chars) {
      const std::string where = ng.name + ", " + c.name();
      const int r = involution_rank_formula(g.group, c);
      checks.push_back({"torsion of Z^w ⊗ Γ(Zπ) is (Z/2)^r, r = #{g ≠ 1 : g^2 = 1, w(g) = -1} [" + where + "]",
                        invariant_factors(AbelianPresentation(r, IntMatrix::Identity(r, r) * Integer(2))).to_string(),
                        [g, c] { return text(obstruction_torsion(c, ZPiModule::free(g.group, 1))); }});
      checks.push_back({"Zπ/N^w ⊗ Z^w is Z/|π| [" + where + "]",
                        invariant_factors(AbelianPresentation::cyclic(g.group.order())).to_string(),
                        [g, c] { return text(twisted_coinvariants(norm_quotient(g.group, c), c).group); }});
      checks.push_back({"Tor_1(Zπ/N^w, Z^w) vanishes [" + where + "]", "0",
                        [g, c] { return text(tor_one(norm_quotient(g.group, c), c)); }});
    }
  }

  Report rep;
  Json list = Json::array();
  int passed = 0;
  for (const auto& check : checks) {
    std::string computed;
    bool pass = false;
    try {
      computed = check.compute();
      pass = computed == check.expected;
    } catch (const std::exception& e) {
      computed = std::string("error: ") + e.what();
    }
    passed += pass;
    list.push_back({{"description", check.description}, {"expected", check.expected}, {"computed", computed}, {"pass", pass}});
    rep.row(pass ? "[PASS]" : "[FAIL]", check.description + ": expected " + check.expected + ", computed " + computed);
  }
  rep.ok = passed == static_cast<int>(checks.size());
  rep.result["checks"] = list;
  rep.result["passed"] = passed;
  rep.result["total"] = checks.size();
  rep.row("summary", std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks pass");
  return rep;
}

// Code points, which is close enough to terminal columns for the symbols used here.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

void print_table(const Report& r, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : r.rows) width = std::max(width, display_width(k));
  for (const auto& [k, v] : r.rows) {
    out << k;
    if (k != "[PASS]" && k != "[FAIL]") out << std::string(width - display_width(k), ' ') << " = ";
    else out << ' ';
    out << v << '\n';
  }
}

void print_error(const Options& opt, const std::string& command, const std::string& kind,
                 const std::string& message, std::ostream& out, std::ostream& err) {
  if (opt.format == "structured") {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["error"] = {{"kind", kind}, {"message", message}};
    out << j.dump(2) << '\n';
  } else {
    err << "error (" << kind << "): " << message << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact invariants of quadratic 2-types over finite groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all commands");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--budget", opt.budget, "Largest free rank a bar resolution may reach")
      ->check(CLI::PositiveNumber);
  app.add_option("--aut-cap", opt.aut_cap, "Largest group order for automorphism enumeration")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--data-dir", opt.data_dir, "Directory holding bundled groups, modules and forms");

  std::string group, character = "trivial", module, form, resolution = "auto", resolution_file, file;
  int degree = 4;
  bool gamma = false, orbits = false;
  std::optional<long long> euler;
  std::vector<std::string> classes;

  const auto add_job = [&](CLI::App* sub, bool with_module) {
    sub->add_option("--group", group, "Group file or bundled group name")->required();
    sub->add_option("--character", character, "Orientation character name (default trivial)");
    if (with_module) sub->add_option("--module", module, "Module file or bundled module name")->required();
  };

  auto* c_gamma = app.add_subcommand("gamma", "Γ of a presented abelian group");
  c_gamma->add_option("file", file, "Presentation file or bundled presentation name")->required();

  auto* c_coinv = app.add_subcommand("coinvariants", "Twisted coinvariants Z^w ⊗ M");
  add_job(c_coinv, true);
  c_coinv->add_flag("--gamma", gamma, "Apply Γ to the module first");

  auto* c_tor = app.add_subcommand("tor1", "Tor_1(M, Z^w) over the group ring");
  add_job(c_tor, true);

  auto* c_hom = app.add_subcommand("homology", "Twisted group homology H_k(G; Z^w)");
  add_job(c_hom, false);
  c_hom->add_option("--degree", degree, "Degree k")->required();
  c_hom->add_option("--resolution", resolution, "Resolution provider")
      ->check(CLI::IsMember({"auto", "bar", "cyclic", "file"}));
  c_hom->add_option("--resolution-file", resolution_file, "Resolution file for --resolution file");
  c_hom->add_flag("--orbits", orbits, "Also count orbits of ±Aut(G, w)");

  auto* c_census = app.add_subcommand("census", "Census of a quadratic 2-type");
  add_job(c_census, true);
  c_census->add_option("--form", form, "Form file or bundled form name")->required();
  c_census->add_option("--euler", euler, "Euler characteristic, for the trace diagnostic");

  auto* c_orbit = app.add_subcommand("orbit", "Orbits of ±Aut(G, w) on homology classes");
  add_job(c_orbit, false);
  c_orbit->add_option("--degree", degree, "Degree k")->required();
  c_orbit->add_option("--resolution", resolution, "Resolution provider")
      ->check(CLI::IsMember({"auto", "bar", "cyclic"}));
  c_orbit->add_option("--class", classes, "Class as comma-separated canonical coordinates (repeatable)");

  auto* c_verify = app.add_subcommand("verify-paper", "Run the bundled golden-value suite");

  std::string command;
  try {
    opt.budget = budget_default();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const io::ParseError& e) {
    print_error(opt, command, "usage", e.what(), out, err);
    return kExitUsage;
  }

  command = app.get_subcommands().front()->get_name();
  try {
    Report r;
    if (c_gamma->parsed()) {
      r = cmd_gamma(opt, file);
    } else if (c_verify->parsed()) {
      r = cmd_verify(opt);
    } else {
      const bool needs_module = c_coinv->parsed() || c_tor->parsed() || c_census->parsed();
      const Job job = load_job(opt, group, character, needs_module ? module : std::string());
      if (c_coinv->parsed())
        r = cmd_coinvariants(job, gamma);
      else if (c_tor->parsed())
        r = cmd_tor1(job);
      else if (c_hom->parsed())
        r = cmd_homology(opt, job, degree, resolution, resolution_file, orbits);
      else if (c_census->parsed())
        r = cmd_census(opt, job, form, euler);
      else
        r = cmd_orbit(opt, job, degree, resolution, classes);
    }
    if (opt.format == "structured") {
      Json j;
      j["schema"] = kSchema;
      j["command"] = command;
      j["ok"] = r.ok;
      j["result"] = r.result;
      out << j.dump(2) << '\n';
    } else {
      print_table(r, out);
    }
    return r.ok ? kExitOk : kExitComputation;
  } catch (const io::ParseError& e) {
    print_error(opt, command, "parse", e.what(), out, err);
    return kExitUsage;
  } catch (const ResourceError& e) {
    print_error(opt, command, "resource", e.what(), out, err);
    return kExitComputation;
  } catch (const EnumerationLimitError& e) {
    print_error(opt, command, "resource", e.what(), out, err);
    return kExitComputation;
  } catch (const std::invalid_argument& e) {
    print_error(opt, command, "input", e.what(), out, err);
    return kExitUsage;
  } catch (const std::exception& e) {
    print_error(opt, command, "internal", e.what(), out, err);
    return kExitComputation;
  }
}

}  // namespace gammalab
