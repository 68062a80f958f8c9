#include "support.hpp"

#include "kbh/beta.hpp"
#include "kbh/identities.hpp"

#include <doctest.h>

using namespace kbh;
using namespace kbh::testing;

namespace {

Letter resolve_t(std::string_view name) {
  if (name.size() < 3 || name.substr(0, 2) != "t_") throw ParseError("bad variable");
  return Letter::of(std::string(name.substr(2)));
}

RatFun rf(const char* text) { return parse_ratfun(text, resolve_t); }

std::string show(const RatFun& r) { return r.to_string(variable_name); }

}  // namespace

TEST_CASE("rational function arithmetic") {
  CHECK((rf("t_a - 1") + rf("1 - t_a")).is_zero());
  CHECK(rf("(t_a^2 - 1)/(t_a - 1)") == rf("t_a + 1"));
  CHECK(show(rf("(t_a^2 - 1)/(t_a - 1)")) == "1 + t_a");
  CHECK(rf("1/(1 + (t_a - 1))") == rf("t_a^-1"));
  CHECK(show(rf("1/(1 + (t_a - 1))")) == "t_a^-1");
  CHECK(show(rf("(2*t_a - 2)/(4*t_a^3 - 4*t_a^2)")) == "t_a^-2/2");
  CHECK_THROWS_AS(rf("1") / RatFun(), DomainError);
  CHECK_THROWS_AS(rf("(1 +"), ParseError);
}

TEST_CASE("rational function normal form") {
  // denominator without monomial factor and with positive leading coefficient
  auto r = rf("(t_a - 1)/(t_a - t_a^2)");
  CHECK(show(r) == "-t_a^-1");
  auto s = rf("(t_a*t_b - 1)/(t_a*t_b - 1)");
  CHECK(s.is_one());
  auto q = rf("(t_a^2*t_b^2 - 1)/(t_a*t_b + 1)");
  CHECK(q.as_poly().has_value());
  CHECK(q == rf("t_a*t_b - 1"));
  CHECK(rf("(t_a - 1)*(t_b + 2)/(t_b + 2)").at_one() == 0);
}

TEST_CASE("univariate gcd against known factorisations") {
  const Letter t = L("t");
  Poly a = (Poly::var(t) - Poly(1)) * (Poly::var(t) + Poly(2)) * (Poly::var(t, 2) + Poly(1));
  Poly b = (Poly::var(t) - Poly(1)) * (Poly::var(t, 2) + Poly(1)) * Poly(6);
  CHECK(Poly::univariate_gcd(a, b) == (Poly::var(t) - Poly(1)) * (Poly::var(t, 2) + Poly(1)));
  CHECK(Poly::univariate_gcd(Poly::var(t) + Poly(1), Poly::var(t) - Poly(1)) == Poly(1));
}

TEST_CASE("rational function parsing and rendering round-trip") {
  std::mt19937_64 rng(8);
  std::vector<Letter> ab{L("a"), L("b")};
  for (int i = 0; i < 30; ++i) {
    auto r = random::random_entry(rng, ab) / (RatFun(1) + random::random_entry(rng, ab));
    CHECK(rf(show(r).c_str()) == r);
  }
}

TEST_CASE("beta operation examples") {
  const Letter u = L("u"), v = L("v"), w = L("w"), x = L("x"), y = L("y"), z = L("z");
  auto rho = BetaElement::generator(1, u, x);
  CHECK(show(rho.entry(u, x)) == "-1 + t_u");

  // hm with alpha = beta = t_u - 1
  BetaElement two({u}, {x, y}, RatFun(1), {{u, {{x, rf("t_u - 1")}, {y, rf("t_u - 1")}}}});
  CHECK(b_hm(two, x, y, z).entry(u, z) == rf("t_u^2 - 1"));

  // hm with a zero column returns the other
  BetaElement one_col({u}, {x, y}, RatFun(1), {{u, {{y, rf("t_u^-1 - 1")}}}});
  CHECK(b_hm(one_col, x, y, z).entry(u, z) == rf("t_u^-1 - 1"));

  // tm adds rows after t_u, t_v -> t_w
  BetaElement rows({u, v}, {x}, RatFun(1), {{u, {{x, rf("t_u - 1")}}}, {v, {{x, rf("t_v - 1")}}}});
  CHECK(b_tm(rows, u, v, w).entry(w, x) == rf("2*t_w - 2"));

  // tha on rho+
  auto acted = b_tha(rho, u, x);
  CHECK(acted.omega() == rf("t_u"));
  CHECK(acted.entry(u, x) == rf("t_u - 1"));
  CHECK(unit_equiv(acted, rho));

  // merge of two generators: block diagonal with omega 1
  auto m = b_merge(rho, BetaElement::generator(-1, v, y));
  CHECK(m.omega().is_one());
  CHECK(m.entry(u, y).is_zero());
  CHECK(m.entry(v, y) == rf("t_v^-1 - 1"));

  // teta sets t_u = 1
  CHECK(b_t_eta(rho, u) == BetaElement::unit_h(x));
}

TEST_CASE("unit equivalence") {
  const Letter u = L("u"), x = L("x");
  BetaElement a({u}, {x}, rf("t_u"), {});
  BetaElement b({u}, {x}, RatFun(1), {});
  CHECK(unit_equiv(a, b));
  BetaElement c({u}, {x}, rf("2*t_u - 1"), {});
  CHECK_FALSE(unit_equiv(c, b));
  CHECK(is_unit_monomial(rf("-t_u^-3*t_x")));
  CHECK_FALSE(is_unit_monomial(rf("2*t_u")));
}

TEST_CASE("beta normalization is validated") {
  const Letter u = L("u"), x = L("x");
  CHECK_THROWS_AS(BetaElement({u}, {x}, rf("2"), {}), DomainError);
  CHECK_THROWS_AS(BetaElement({u}, {x}, RatFun(1), {{u, {{x, rf("t_u")}}}}), DomainError);
  CHECK_THROWS_AS(BetaElement({u}, {x}, RatFun(1), {{u, {{x, rf("t_v")}}}}), DomainError);
}

TEST_CASE("normalization survives random beta operations") {
  std::mt19937_64 rng(77);
  const Letter u = L("u"), v = L("v"), x = L("x"), y = L("y"), p = L("p"), q = L("q");
  for (int t = 0; t < 10; ++t) {
    auto e = random::random_beta(rng, {u, v}, {x, y});
    auto f = b_hm(b_tm(b_tha(e, u, y), u, v, p), x, y, q);
    CHECK(f.omega().at_one() == 1);
    for (auto& [row, cols] : f.rows())
      for (auto& [col, val] : cols) CHECK(val.at_one() == 0);
  }
}

TEST_CASE("beta axioms and relations") {
  std::mt19937_64 rng(4242);
  for (auto& c : beta_axioms(rng, 5)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  for (auto& c : beta_relations(rng, 5)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}
