#include "kbh/errors.hpp"
#include "kbh/identities.hpp"
#include "kbh/serialize.hpp"
#include "kbh/tangle.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int exit_failure = 1;
constexpr int exit_input = 2;

int cmd_zeta(const std::string& path, int degree, int show, bool wheels_only, bool as_json) {
  const kbh::Tangle t = kbh::load_tangle(path);
  const kbh::MMAElement z = kbh::zeta_of_tangle(t, degree);
  if (as_json) {
    std::cout << kbh::to_json(z).dump(2) << "\n";
  } else {
    std::cout << kbh::render(z, show < 0 ? degree : std::min(show, degree), wheels_only);
  }
  return 0;
}

int cmd_alexander(const std::string& path, bool as_json) {
  const kbh::Tangle t = kbh::load_tangle(path);
  const kbh::BetaElement b = kbh::beta_of_tangle(t);
  const kbh::LaurentPoly a = kbh::normalize_alexander(b);
  if (as_json) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& c : a.coeffs) coeffs.push_back(c.get_str());
    nlohmann::json out{{"alexander", a.to_string()}, {"low", a.low}, {"coefficients", coeffs}, {"beta", kbh::to_json(b)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << a.to_string() << "\n";
  }
  return 0;
}

int cmd_selftest(int degree, unsigned long seed, int trials) {
  kbh::random::Rng rng(seed);
  struct Suite {
    const char* name;
    std::function<kbh::Checks()> run;
  };
  const std::vector<Suite> suites{
      {"MMA axioms", [&] { return kbh::mma_axioms(rng, degree, trials); }},
      {"relations", [&] { return kbh::mma_relations(rng, degree, trials); }},
      {"J identities", [&] { return kbh::j_identities(rng, degree, trials); }},
      {"div identities", [&] { return kbh::div_identities(rng, degree, trials); }},
      {"beta axioms", [&] { return kbh::beta_axioms(rng, trials); }},
      {"beta relations", [&] { return kbh::beta_relations(rng, trials); }},
  };
  bool ok = true;
  for (auto& s : suites) {
    for (auto& c : s.run()) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << s.name << ": " << c.name << " (" << c.trials << ")";
      if (!c.passed) std::cout << " " << c.detail;
      std::cout << "\n";
      ok = ok && c.passed;
    }
  }
  return ok ? 0 : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-and-wheel invariant zeta and the beta-calculus Alexander polynomial of tangles"};
  app.require_subcommand(1);

  std::string path;
  int degree = 4, show = -1, trials = 10;
  unsigned long seed = 1;
  bool wheels_only = false, as_json = false;

  auto* zeta = app.add_subcommand("zeta", "zeta of a tangle, truncated at a degree");
  zeta->add_option("file", path, "tangle file (text or JSON)")->required();
  zeta->add_option("--degree,-d", degree, "truncation degree")->check(CLI::Range(1, 64));
  zeta->add_option("--show", show, "print terms up to this degree only")->check(CLI::NonNegativeNumber);
  zeta->add_flag("--wheels-only", wheels_only, "print omega only");
  zeta->add_flag("--json", as_json, "JSON output");

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a long knot via the beta calculus");
  alex->add_option("file", path, "tangle file (text or JSON)")->required();
  alex->add_flag("--json", as_json, "JSON output");

  auto* self = app.add_subcommand("selftest", "run the identity suites on seeded random inputs");
  self->add_option("--degree,-d", degree, "truncation degree")->check(CLI::Range(1, 8));
  self->add_option("--seed", seed, "random seed");
  self->add_option("--trials", trials, "random inputs per identity")->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*zeta) return cmd_zeta(path, degree, show, wheels_only, as_json);
    if (*alex) return cmd_alexander(path, as_json);
    return cmd_selftest(degree, seed, trials);
  } catch (const kbh::ParseError& e) {
    std::cerr << "kbh: " << path << ": " << e.what() << "\n";
    return exit_input;
  } catch (const kbh::LabelError& e) {
    std::cerr << "kbh: " << e.what() << "\n";
    return exit_input;
  } catch (const kbh::DomainError& e) {
    std::cerr << "kbh: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "kbh: internal error: " << e.what() << "\n";
    return exit_failure;
  }
}
