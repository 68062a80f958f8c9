#include "support.hpp"

#include "kbh/identities.hpp"
#include "kbh/mma.hpp"

#include <doctest.h>

using namespace kbh;
using namespace kbh::testing;

TEST_CASE("generator values and units") {
  const int D = 4;
  const Letter u = L("u"), x = L("x");
  auto rho = MMAElement::generator(1, u, x, D);
  CHECK(rho.lambda(x) == letter("u", D));
  CHECK(rho.omega().is_zero());
  CHECK(MMAElement::generator(-1, u, x, D).lambda(x) == letter("u", D) * Q(-1));
  CHECK_THROWS_AS(rho.lambda(u), LabelError);
  CHECK_THROWS_AS(MMAElement::generator(2, u, x, D), DomainError);
}

TEST_CASE("hm is bch of the head values") {
  const int D = 4;
  const Letter u = L("u"), v = L("v"), x = L("x"), y = L("y"), z = L("z");
  auto e = merge(MMAElement::generator(1, u, x, D), MMAElement::generator(1, v, y, D));
  auto r = hm(e, x, y, z);
  CHECK(r.lambda(z) == bch(letter("u", D), letter("v", D)));
  CHECK_FALSE(r.has_head(x));
}

TEST_CASE("tha on a generator with its own head only adds a degree-one wheel") {
  const int D = 5;
  const Letter u = L("u"), x = L("x");
  for (int s : {1, -1}) {
    auto rho = MMAElement::generator(s, u, x, D);
    CHECK(tha(rho, u, x) == rho);
  }
}

TEST_CASE("tha of a head carrying another tail") {
  // ({u,v}; x -> v, y -> u): acting by u on x conjugates u by e^{ad v}
  const int D = 4;
  const Letter u = L("u"), v = L("v"), x = L("x"), y = L("y");
  MMAElement e(D, {u, v}, {{x, letter("v", D)}, {y, letter("u", D)}}, CyclicSeries(D));
  auto r = tha(e, u, x);
  CHECK(r.lambda(x) == letter("v", D));
  CHECK(r.lambda(y) == conj_RC(u, letter("v", D), letter("u", D)));
  CHECK(r.omega() == cw_reduce(J_u(u, letter("v", D))));
}

TEST_CASE("label errors") {
  const int D = 3;
  const Letter u = L("u"), v = L("v"), x = L("x"), y = L("y");
  auto rho = MMAElement::generator(1, u, x, D);
  CHECK_THROWS_AS(merge(rho, rho), LabelError);
  CHECK_THROWS_AS(kbh::tm(rho, u, v, u), LabelError);
  CHECK_THROWS_AS(hm(rho, x, y, x), LabelError);
  CHECK_THROWS_AS(tha(rho, v, x), LabelError);
  CHECK_THROWS_AS(t_sigma(merge(rho, MMAElement::unit_t(v, D)), u, v), LabelError);
  CHECK_THROWS_AS(merge(rho, MMAElement::unit_t(v, D + 1)), DegreeMismatch);
}

TEST_CASE("element validation") {
  const int D = 3;
  const Letter u = L("u"), x = L("x");
  CHECK_THROWS_AS(MMAElement(D, {}, {{x, letter("u", D)}}, CyclicSeries(D)), DomainError);
  CHECK_THROWS_AS(MMAElement(D, {u}, {}, cw(D, {{"u", 1}})), DomainError);
}

TEST_CASE("MMA axioms at low degree") {
  std::mt19937_64 rng(1);
  for (auto& c : mma_axioms(rng, 3, 4)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("relations on generators at low degree") {
  std::mt19937_64 rng(2);
  for (auto& c : mma_relations(rng, 4, 3)) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}
