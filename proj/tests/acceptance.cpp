// Acceptance checks AC1..AC9. One [PASS]/[FAIL] line per criterion; exit status 1 if any fails.

#include "oracles.hpp"
#include "properties.hpp"

#include "gammalab/builtin_groups.hpp"
#include "gammalab/classify.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/io.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gammalab;

namespace {

const std::filesystem::path kData = GAMMALAB_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string text(const AbelianPresentation& a) { return invariant_factors(a).to_string(); }

io::GroupData z2_data() { return io::load_group(kData / "groups" / "Z2.json"); }

QuadraticTwoType two_type(const io::GroupData& g, const OrientationChar& w, const std::string& module,
                          const std::string& form) {
  auto pi2 = io::load_module(kData / "modules" / (module + ".json"), g, w);
  auto f = io::load_form(kData / "forms" / (form + ".json"), pi2, w);
  return QuadraticTwoType(pi2, f);
}

std::vector<OrientationChar> characters(const io::GroupData& g) {
  std::vector<OrientationChar> out{OrientationChar::trivial(g.group)};
  out.insert(out.end(), g.characters.begin(), g.characters.end());
  return out;
}

void ac1(Outcome& o) {
  const auto z2 = gamma_presented(io::load_presentation(kData / "presentations" / "Z2.json")).presentation;
  o.expect(text(z2) == "Z/4", "Γ(Z/2) = " + text(z2));
  o.expect(oracle::same(invariant_factors(z2), oracle::brute_gamma({2})), "Γ(Z/2) disagrees with the brute-force presentation");
  for (int n = 1; n <= 5; ++n) {
    const auto f = invariant_factors(gamma_presented(AbelianPresentation::free(n)).presentation);
    o.expect(f.torsion.empty() && f.free_rank == static_cast<std::size_t>(n * (n + 1) / 2),
             "Γ(Z^" + std::to_string(n) + ") = " + f.to_string());
  }
  o.detail << "Γ(Z/2) = " << text(z2) << ", Γ(Z^5) = "
           << text(gamma_presented(AbelianPresentation::free(5)).presentation);
}

void ac2(Outcome& o) {
  const auto g = z2_data();
  const auto w = io::find_character(g, "w1");
  const auto pi2 = io::load_module(kData / "modules" / "regular.json", g, w);
  const auto tors = obstruction_torsion(w, pi2);
  o.expect(text(tors) == "Z/2", "Tors = " + text(tors));
  o.detail << "Tors = " << text(tors);
}

void ac3(Outcome& o) {
  const auto g = z2_data();
  const auto w = io::find_character(g, "w1");
  const auto q = two_type(g, w, "z_plus_zw", "rp2_s2");
  const auto coinv = twisted_coinvariants(gamma_module(q.pi2()), w).group;
  const auto report = census(q);
  o.expect(text(coinv) == "Z/2 + Z/2 + Z", "Z^w ⊗ Γ = " + text(coinv));
  o.expect(report.count == 4, "count = " + to_string(report.count));
  o.detail << "Z^w ⊗ Γ = " << text(coinv) << ", count = " << report.count;
}

void ac4(Outcome& o) {
  int cases = 0;
  for (const auto& ng : groups::small_groups()) {
    if (ng.group.order() > 8) continue;
    for (const auto& w : all_characters(ng.group)) {
      int r = 0;
      for (Element x = 1; x < ng.group.order(); ++x) r += ng.group.mul(x, x) == 0 && w(x) == -1;
      oracle::Invariants expected;
      expected.torsion.assign(static_cast<std::size_t>(r), 2);
      const auto tors = invariant_factors(obstruction_torsion(w, ZPiModule::free(ng.group, 1)));
      o.expect(oracle::same(tors, expected), ng.name + "/" + w.name() + ": " + tors.to_string() + ", r = " + std::to_string(r));
      ++cases;
    }
  }
  o.detail << cases << " (group, character) pairs";
}

void ac5(Outcome& o) {
  int cases = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kData / "groups")) {
    const auto g = io::load_group(entry.path());
    for (const auto& w : characters(g)) {
      const auto nq = norm_quotient(g.group, w);
      const auto coinv = invariant_factors(twisted_coinvariants(nq, w).group);
      oracle::Invariants cyclic;
      if (g.group.order() > 1) cyclic.torsion = {g.group.order()};
      o.expect(oracle::same(coinv, cyclic), g.name + "/" + w.name() + ": Zπ/N^w ⊗ Z^w = " + coinv.to_string());
      const auto tor = invariant_factors(tor_one(nq, w));
      o.expect(tor.is_trivial(), g.name + "/" + w.name() + ": Tor_1 = " + tor.to_string());
      ++cases;
    }
  }
  o.detail << cases << " bundled (group, character) pairs";
}

void ac6(Outcome& o) {
  const auto g = z2_data();
  const auto w = io::find_character(g, "w1");
  const auto pi2 = io::load_module(kData / "modules" / "regular.json", g, w);
  const auto oracle_part = oracle::periodic_homology(2, true, 4);
  std::string totals;
  for (auto kind : {ResolutionKind::Cyclic, ResolutionKind::Bar}) {
    const auto split = h4_twotype_split(w, pi2, kind);
    const std::string name = kind == ResolutionKind::Cyclic ? "periodic" : "bar";
    o.expect(text(split.total) == "Z/2 + Z/2 + Z", name + " total = " + text(split.total));
    o.expect(oracle::same(invariant_factors(split.homology_part), oracle_part),
             name + " H_4(Z/2; Z^w) = " + text(split.homology_part));
    totals += name + ": " + text(split.total) + "; ";
  }
  o.detail << totals;
}

void ac7(Outcome& o) {
  const auto g = z2_data();
  const auto w = io::find_character(g, "w1");
  const auto report = census(two_type(g, w, "regular", "rp4_cp2"));
  o.expect(report.count == 2, "count = " + to_string(report.count));
  o.detail << "count = " << report.count;
}

void ac8(Outcome& o) {
  for (const auto& suite : {props::gamma_functor_laws, props::gamma_defining_relations, props::gamma_sum_decomposition,
                            props::transfer_identities, props::involution_laws, props::hermitian_laws,
                            props::transfer_scaling_z6, props::kappa_existence, props::census_base_change}) {
    const auto r = suite(props::kSeed);
    o.expect(r.ok(), r.summary());
    o.detail << r.name << " " << r.cases << "; ";
  }
}

void ac9(Outcome& o) {
  const auto r = props::smith_engine(props::kSeed, 500, 12, 50);
  o.expect(r.ok(500), r.summary());
  o.detail << r.summary();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 Γ(Z/2) and Γ(Z^n), n = 1..5", ac1},
      {"AC2 torsion for π = Z/2, π2 = Zπ, w nontrivial", ac2},
      {"AC3 π2 = Z ⊕ Z^w coinvariants and count", ac3},
      {"AC4 (Z/2)^r torsion for all groups of order <= 8", ac4},
      {"AC5 norm quotient and Tor_1 for bundled groups", ac5},
      {"AC6 H_4 split with both providers", ac6},
      {"AC7 census count for π2 = Zπ with <1>", ac7},
      {"AC8 property suites", ac8},
      {"AC9 Smith normal form engine", ac9},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms): " << o.detail.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
