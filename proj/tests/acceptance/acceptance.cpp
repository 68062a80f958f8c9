// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "kbh/identities.hpp"
#include "kbh/serialize.hpp"
#include "kbh/tangle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace kbh;

namespace {

std::string fixture(const std::string& name) { return std::string(KBH_FIXTURE_DIR) + "/" + name; }

const std::vector<int> k817{-1, 4, -8, 11, -8, 4, -1};  // X^-3 .. X^3
const std::string k817_text = "-t^-3 + 4*t^-2 - 8*t^-1 + 11 - 8*t + 4*t^2 - t^3";

using Series = std::vector<Q>;  // truncated power series in x

Series series_mul(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// log A(e^x) to degree D: A(e^x) = sum_k a_k e^{kx}, then log(1 + y) as the
// alternating sum of y^n / n, y having no constant term because A(1) = 1.
Series log_alexander_oracle(const std::vector<int>& coeffs, int low, int D) {
  const std::size_t n = static_cast<std::size_t>(D) + 1;
  Series a(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Q k(low + static_cast<int>(i));
    Q term(1);
    for (std::size_t d = 0; d < n; ++d) {
      a[d] += coeffs[i] * term;
      term = term * k / Q(static_cast<long>(d) + 1);
    }
  }
  if (a[0] != Q(1)) throw std::runtime_error("A(1) != 1");
  Series y = a;
  y[0] = 0;
  Series result(n), power = y;
  for (int m = 1; m <= D; ++m) {
    const Q c = Q(m % 2 == 1 ? 1 : -1, m);
    for (std::size_t d = 0; d < n; ++d) result[d] += c * power[d];
    power = series_mul(power, y);
  }
  return result;
}

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome from_checks(const Checks& checks) {
  int trials = 0;
  for (auto& c : checks) {
    trials += c.trials;
    if (!c.passed) return {false, c.name + ": " + c.detail};
  }
  return {true, std::to_string(checks.size()) + " checks, " + std::to_string(trials) + " trials"};
}

Series abelianized_wheels(const MMAElement& z, int D) {
  const Letter s = *z.tails().begin();
  Series w(static_cast<std::size_t>(D) + 1);
  for (int d = 2; d <= D; ++d) w[static_cast<std::size_t>(d)] = z.omega().coeff(Word(static_cast<std::size_t>(d), s.id()));
  return w;
}

bool same_from_degree_2(const Series& a, const Series& b, int D) {
  for (int d = 2; d <= D; ++d)
    if (a[static_cast<std::size_t>(d)] != b[static_cast<std::size_t>(d)]) return false;
  return true;
}

std::string show(const Series& s) {
  std::ostringstream o;
  for (std::size_t d = 2; d < s.size(); ++d) o << (d > 2 ? " " : "") << s[d];
  return o.str();
}

MMAElement rotate_rgb(const MMAElement& z) {
  const Letter r = Letter::of("r"), g = Letter::of("g"), b = Letter::of("b"), tmp = r.temporary();
  auto rename = [&](const MMAElement& e, Letter from, Letter to) { return h_sigma(t_sigma(e, from, to), from, to); };
  // r -> g, g -> b, b -> r
  return rename(rename(rename(rename(z, r, tmp), b, r), g, b), tmp, g);
}

}  // namespace

int main() {
  const int D = 5;
  bool all = true;
  auto run = [&](int n, const std::string& title, const std::function<Outcome()>& f) {
    Outcome o{false, ""};
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << o.detail << ")" << std::endl;
  };

  const auto k8 = load_tangle(fixture("8_17.tangle"));
  MMAElement z817(1, {}, {}, CyclicSeries(1));

  run(1, "8_17 wheels equal log A(e^x) at degrees 2..6", [&] {
    auto t0 = std::chrono::steady_clock::now();
    z817 = zeta_of_tangle(k8, 6);
    double s = seconds_since(t0);
    auto w = abelianized_wheels(z817, 6);
    auto oracle = log_alexander_oracle(k817, -3, 6);
    bool ok = same_from_degree_2(w, oracle, 6) && s <= 600;
    return Outcome{ok, "wheels " + show(w) + "; oracle " + show(oracle) + "; " + fmt_seconds(s)};
  });

  run(2, "8_17 beta Alexander polynomial", [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto a = alexander(k8);
    double s = seconds_since(t0);
    return Outcome{a.to_string() == k817_text && s <= 1.0, a.to_string() + "; " + fmt_seconds(s)};
  });

  run(3, "MMA axioms on random elements at D=5", [&] {
    random::Rng rng(31);
    return from_checks(mma_axioms(rng, D, 20));
  });

  run(4, "zeta relations at D=5", [&] {
    random::Rng rng(37);
    return from_checks(mma_relations(rng, D, 5));
  });

  run(5, "J identities at D=5", [&] {
    random::Rng rng(41);
    return from_checks(j_identities(rng, D, 10));
  });

  run(6, "div cocycle and additivity at D=5", [&] {
    random::Rng rng(43);
    return from_checks(div_identities(rng, D, 10));
  });

  run(7, "beta axioms and relations", [&] {
    random::Rng rng(47);
    auto checks = beta_axioms(rng, 20);
    auto rel = beta_relations(rng, 10);
    checks.insert(checks.end(), rel.begin(), rel.end());
    return from_checks(checks);
  });

  run(8, "log of beta omega equals abelianized zeta wheels for 8_17", [&] {
    if (z817.degree() < 6) z817 = zeta_of_tangle(k8, 6);
    auto beta = beta_of_tangle(k8);
    const Letter s = *z817.tails().begin();
    if (*beta.tails().begin() != s) return Outcome{false, "beta and zeta strands differ"};
    auto l = log_expansion(beta.omega(), s, 6);
    auto w = abelianized_wheels(z817, 6);
    return Outcome{same_from_degree_2(w, l, 6), "log omega " + show(l)};
  });

  run(9, "Borromean zeta at D=4 invariant under r -> g -> b -> r", [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto z = zeta_of_tangle(load_tangle(fixture("borromean.tangle")), 4);
    bool ok = rotate_rgb(z) == z;
    double s = seconds_since(t0);
    return Outcome{ok && s <= 60, fmt_seconds(s)};
  });

  run(10, "R2, R3, virtual, detour and OC moves preserve zeta at D=4; UC does not", [&] {
    std::string bad;
    for (const char* move : {"r2", "r2_mixed", "r3", "r3_mixed", "vr2", "vr3", "mixed", "detour", "oc"}) {
      auto before = zeta_of_tangle(load_tangle(fixture(std::string("moves/") + move + "_before.tangle")), 4);
      auto after = zeta_of_tangle(load_tangle(fixture(std::string("moves/") + move + "_after.tangle")), 4);
      if (!(before == after)) bad += std::string(bad.empty() ? "" : ", ") + move;
    }
    bool uc_differs = !(zeta_of_tangle(load_tangle(fixture("moves/uc_before.tangle")), 4) ==
                        zeta_of_tangle(load_tangle(fixture("moves/uc_after.tangle")), 4));
    if (!uc_differs) bad += std::string(bad.empty() ? "" : ", ") + "uc unchanged";
    return Outcome{bad.empty(), bad.empty() ? "9 moves equal, uc differs" : bad};
  });

  return all ? 0 : 1;
}
