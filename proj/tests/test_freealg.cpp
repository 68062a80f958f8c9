#include "support.hpp"

#include <doctest.h>

using namespace kbh;
using namespace kbh::testing;

TEST_CASE("fa_mul concatenates and truncates") {
  CHECK(fa_mul(fa(3, {{"u", 1}}), fa(3, {{"v", 1}})) == fa(3, {{"uv", 1}}));
  CHECK(fa_mul(fa(3, {{"u", 1}, {"v", 1}}), fa(3, {{"u", 1}})) == fa(3, {{"uu", 1}, {"vu", 1}}));
  CHECK(fa_mul(fa(1, {{"u", 1}}), fa(1, {{"v", 1}})).is_zero());
  CHECK_THROWS_AS(fa_mul(fa(2, {{"u", 1}}), fa(3, {{"v", 1}})), DegreeMismatch);
}

TEST_CASE("fa_exp and fa_log on small inputs") {
  CHECK(fa_exp(AssocSeries(4)) == AssocSeries::one(4));
  CHECK(fa_exp(fa(3, {{"u", 1}})) == fa(3, {{"", 1}, {"u", 1}, {"uu", Q(1, 2)}, {"uuu", Q(1, 6)}}));
  CHECK(fa_mul(fa_exp(fa(5, {{"u", 1}})), fa_exp(fa(5, {{"u", -1}}))) == AssocSeries::one(5));
  CHECK(fa_log(AssocSeries::one(4)).is_zero());
  CHECK(fa_log(fa_exp(fa(5, {{"u", 1}}))) == fa(5, {{"u", 1}}));
  CHECK_THROWS_AS(fa_exp(fa(3, {{"", 1}, {"u", 1}})), DomainError);
  CHECK_THROWS_AS(fa_log(fa(3, {{"u", 1}})), DomainError);
}

TEST_CASE("log(exp u exp v) against a hand-rolled polynomial multiplier") {
  const std::size_t D = 3;
  // exp u and exp v to degree 3, then log(1+x) = x - x^2/2 + x^3/3.
  NcPoly eu{{"", 1}, {"u", 1}, {"uu", Q(1, 2)}, {"uuu", Q(1, 6)}};
  NcPoly ev{{"", 1}, {"v", 1}, {"vv", Q(1, 2)}, {"vvv", Q(1, 6)}};
  NcPoly x = nc_add(nc_mul(eu, ev, D), NcPoly{{"", 1}}, Q(-1));
  NcPoly x2 = nc_mul(x, x, D), x3 = nc_mul(x2, x, D);
  NcPoly log = nc_add(nc_add(x, x2, Q(-1, 2)), x3, Q(1, 3));

  auto got = fa_log(fa_mul(fa_exp(fa(3, {{"u", 1}})), fa_exp(fa(3, {{"v", 1}}))));
  CHECK(got == from_nc(log, 3));
  CHECK(got.grades(2, 2) == fa(3, {{"uv", Q(1, 2)}, {"vu", Q(-1, 2)}}));
  CHECK(got.grades(1, 1) == fa(3, {{"u", 1}, {"v", 1}}));
}

TEST_CASE("tr identifies rotations") {
  CHECK(tr(fa(3, {{"uv", 1}})) == tr(fa(3, {{"vu", 1}})));
  CHECK(tr(fa(3, {{"uv", 1}, {"vu", -1}})).is_zero());
  CHECK(tr(fa(3, {{"uuv", 1}, {"uvu", 1}})) == cw(3, {{"uuv", 2}}));
  CHECK(tr(fa(3, {{"", 5}})).is_zero());
  auto w = tr(fa(4, {{"vuvu", 1}}));
  CHECK(w.coeff(parse_word("uvuv")) == 1);
}

TEST_CASE("cw_reduce drops degree one and is idempotent") {
  CHECK(cw_reduce(cw(3, {{"u", 1}})).is_zero());
  CHECK(cw_reduce(cw(3, {{"uv", 1}})) == cw(3, {{"uv", 1}}));
  auto w = cw(3, {{"u", 2}, {"uv", 1}, {"uuv", 3}});
  CHECK(cw_reduce(cw_reduce(w)) == cw_reduce(w));
}

TEST_CASE("free associative algebra identities on random series") {
  std::mt19937_64 rng(20240917);
  std::vector<Letter> abc{L("u"), L("v"), L("w")};
  for (int trial = 0; trial < 8; ++trial) {
    const int D = 5;
    auto a = random_fa(rng, abc, D), b = random_fa(rng, abc, D), c = random_fa(rng, abc, D);
    CHECK(fa_mul(fa_mul(a, b), c) == fa_mul(a, fa_mul(b, c)));
    CHECK(fa_mul(a, b + c) == fa_mul(a, b) + fa_mul(a, c));
    CHECK(fa_mul(a + b, c) == fa_mul(a, c) + fa_mul(b, c));
    CHECK(tr(fa_mul(a, b)) == tr(fa_mul(b, a)));
  }
  std::vector<Letter> uv{L("u"), L("v")};
  for (int D = 1; D <= 7; ++D) {
    auto a = random_fa(rng, uv, D, 2);
    auto b = random_fa(rng, uv, D, 2);
    CHECK(fa_log(fa_exp(a)) == a);
    auto one_b = AssocSeries::one(D) + b;
    CHECK(fa_exp(fa_log(one_b)) == one_b);
  }
}

TEST_CASE("letter substitution commutes with products, exp, log and tr") {
  std::mt19937_64 rng(77);
  std::vector<Letter> abc{L("u"), L("v"), L("w")};
  const int D = 5;
  for (int trial = 0; trial < 4; ++trial) {
    auto a = random_fa(rng, abc, D), b = random_fa(rng, abc, D);
    LetterImages<Q> m{{L("u"), random_fa(rng, abc, D, 2)}, {L("w"), fa(D, {{"v", 2}})}};
    CHECK(substitute(fa_mul(a, b), m) == fa_mul(substitute(a, m), substitute(b, m)));
    CHECK(substitute(fa_exp(a), m) == fa_exp(substitute(a, m)));
    auto one_b = AssocSeries::one(D) + b;
    CHECK(substitute(fa_log(one_b), m) == fa_log(substitute(one_b, m)));
    CHECK(substitute(tr(a), m) == tr(substitute(a, m)));
  }
}

TEST_CASE("parallel kernels agree with the serial references") {
  std::mt19937_64 rng(4242);
  std::vector<Letter> abcd{L("u"), L("v"), L("w"), L("x")};
  for (int trial = 0; trial < 6; ++trial) {
    const int D = 6;
    auto a = random_fa(rng, abcd, D, 30), b = random_fa(rng, abcd, D, 30);
    CHECK(kernels::mul(a, b) == kernels::mul_reference(a, b));
    LetterImages<Q> m{{L("u"), random_fa(rng, abcd, D, 4)}, {L("x"), AssocSeries(D)}};
    CHECK(kernels::substitute(a, m) == kernels::substitute_reference(a, m));
  }
}

TEST_CASE("substitution rejects images with a constant term") {
  LetterImages<Q> m{{L("u"), fa(3, {{"", 1}, {"v", 1}})}};
  CHECK_THROWS_AS(substitute(fa(3, {{"u", 1}}), m), DomainError);
}
