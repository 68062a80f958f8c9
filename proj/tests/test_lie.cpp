#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace kbh;
using namespace kbh::testing;

namespace {

// Brute force: every word of length <= d that is smaller than all of its rotations.
std::vector<Word> lyndon_by_filter(const std::vector<Letter>& alphabet, int d) {
  std::vector<Word> all{Word{}}, out;
  for (int len = 1; len <= d; ++len) {
    std::vector<Word> next;
    for (auto& w : all)
      for (Letter l : alphabet) next.push_back(w + word_of(l));
    all = next;
    std::vector<Word> here;
    for (auto& w : all) {
      bool ok = true;
      for (int k = 1; k < len; ++k)
        if (!word_less(w, w.substr(static_cast<std::size_t>(k)) + w.substr(0, static_cast<std::size_t>(k)))) ok = false;
      if (ok) here.push_back(w);
    }
    std::sort(here.begin(), here.end(), word_less);
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

}  // namespace

TEST_CASE("Lyndon word enumeration") {
  CHECK(lyndon_words({L("u")}, 2) == std::vector<Word>{parse_word("u")});
  CHECK(lyndon_words({L("v"), L("u")}, 2) == std::vector<Word>{parse_word("u"), parse_word("v"), parse_word("uv")});
  CHECK(lyndon_words({L("u"), L("v")}, 3) ==
        std::vector<Word>{parse_word("u"), parse_word("v"), parse_word("uv"), parse_word("uuv"), parse_word("uvv")});
  for (int d = 1; d <= 6; ++d) CHECK(lyndon_words({L("u"), L("v"), L("w")}, d) == lyndon_by_filter({L("u"), L("v"), L("w")}, d));
  CHECK_THROWS_AS(lyndon_words({}, 2), DomainError);
}

TEST_CASE("letter order is lexicographic on names, not interning order") {
  Letter z = Letter::of("zeta9"), a = Letter::of("alpha9"), m = Letter::of("mid9");
  CHECK(a < m);
  CHECK(m < z);
  CHECK(Letter::of("10") < Letter::of("9"));
  CHECK_THROWS_AS(Letter::of("~x"), DomainError);
  CHECK_THROWS_AS(Letter::of(""), DomainError);
  CHECK(z.temporary().name() == "~zeta9");
}

TEST_CASE("iota on brackets") {
  const int D = 4;
  CHECK(iota(letter("u", D)) == fa(D, {{"u", 1}}));
  CHECK(iota(lie(D, {{"uv", 1}})) == fa(D, {{"uv", 1}, {"vu", -1}}));
  auto uuv = bracket(letter("u", D), bracket(letter("u", D), letter("v", D)));
  CHECK(iota(uuv) == fa(D, {{"uuv", 1}, {"uvu", -2}, {"vuu", 1}}));
  CHECK(bracket_form(parse_word("uuv")) == "[u,[u,v]]");
}

TEST_CASE("bracket in Lyndon normal form") {
  const int D = 4;
  auto u = letter("u", D), v = letter("v", D);
  CHECK(bracket(v, u) == lie(D, {{"uv", -1}}));
  CHECK(bracket(u, u).is_zero());
  auto uvv = bracket(bracket(u, v), v);
  CHECK(uvv == lie(D, {{"uvv", 1}}));
  CHECK(iota(uvv) == fa(D, {{"uvv", 1}, {"vuv", -2}, {"vvu", 1}}));
  CHECK(bracket(u, bracket(u, bracket(u, v))).grades(4, 4).size() == 1);
  CHECK(bracket(lie(2, {{"uv", 1}}), letter("u", 2)).is_zero());
}

TEST_CASE("to_lie rejects non-primitive input") {
  CHECK_THROWS_AS(to_lie(fa(3, {{"uv", 1}})), InternalError);
  CHECK_THROWS_AS(to_lie(fa(3, {{"", 1}})), InternalError);
}

TEST_CASE("bch low degrees") {
  const int D = 3;
  auto u = letter("u", D), v = letter("v", D);
  CHECK(bch(u, LieSeries(D)) == u);
  CHECK(bch(LieSeries(D), v) == v);
  auto b = bch(u, v);
  CHECK(b.grades(2, 2) == bracket(u, v) * Q(1, 2));
  auto expected3 = bracket(u, bracket(u, v)) * Q(1, 12) + bracket(v, bracket(v, u)) * Q(1, 12);
  CHECK(b.grades(3, 3) == expected3);
  // Oracle: the full associative computation, projected.
  CHECK(iota(b) == fa_log(fa_mul(fa_exp(iota(u)), fa_exp(iota(v)))));
}

TEST_CASE("morphisms on Lie series") {
  const int D = 3;
  auto u = letter("u", D), v = letter("v", D), w = letter("w", D);
  LetterMap merge{{L("u"), w}, {L("v"), w}};
  CHECK(apply_morphism(u + v, merge) == w * Q(2));
  CHECK(apply_morphism(bracket(u, v), LetterMap{{L("u"), LieSeries(D)}}).is_zero());
  CHECK(apply_morphism(bracket(u, v), LetterMap{{L("u"), v}}).is_zero());
}

TEST_CASE("C and RC conjugations, examples") {
  auto u = letter("u", 2), v = letter("v", 2);
  CHECK(conj_C(L("u"), LieSeries(2), v + u) == v + u);
  CHECK(conj_C(L("u"), u + v, v) == v);
  CHECK(conj_C(L("u"), v, u) == u - bracket(v, u));
  CHECK(conj_RC(L("u"), LieSeries(2), u) == u);

  const int D = 5;
  auto u5 = letter("u", D), v5 = letter("v", D);
  // gamma without u: RC is plain conjugation e^{ad v}(u).
  CHECK(iota(conj_RC(L("u"), v5, u5)) == exp_ad(iota(v5), iota(u5), 1));
}

TEST_CASE("ad_u derivation, examples") {
  const int D = 4;
  auto u = letter("u", D), v = letter("v", D);
  auto g = lie(D, {{"v", 2}, {"uv", 1}});
  CHECK(ad_u(L("u"), g, v).is_zero());
  CHECK(ad_u(L("u"), g, u) == bracket(g, u));
  CHECK(ad_u(L("u"), g, bracket(u, v)) == bracket(bracket(g, u), v));
}

TEST_CASE("free Lie algebra properties on random inputs") {
  std::mt19937_64 rng(1789);
  std::vector<Letter> uvw{L("u"), L("v"), L("w")};
  const Letter u = L("u"), v = L("v");
  for (int trial = 0; trial < 5; ++trial) {
    int D = 5;
    auto a = random_lie(rng, uvw, D), b = random_lie(rng, uvw, D), c = random_lie(rng, uvw, D);
    // Jacobi
    CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
    CHECK(bracket(a, b) == -bracket(b, a));
    // bch associativity
    CHECK(bch(bch(a, b), c) == bch(a, bch(b, c)));
    // C inverts RC, and the fixpoint agrees with stable application
    auto rc = conj_RC(u, a, b);
    CHECK(conj_C(u, a, rc) == b);
    CHECK(conj_RC(u, a, conj_C(u, a, b)) == b);
    CHECK(rc == conj_RC_stable(u, a, b));
    // RC_u^{bch(a,b)} = RC_u^a then RC_u^{b RC_u^a}
    auto b1 = conj_RC(u, a, b);
    CHECK(conj_RC(u, bch(a, b), c) == conj_RC(u, b1, conj_RC(u, a, c)));
    // RC_u^a RC_v^{b'} = RC_v^b RC_u^{a'}
    auto a_prime = conj_RC(v, b, a), b_prime = conj_RC(u, a, b);
    CHECK(conj_RC(v, b_prime, conj_RC(u, a, c)) == conj_RC(u, a_prime, conj_RC(v, b, c)));
    // morphisms respect bracket and bch
    LetterMap m{{u, random_lie(rng, uvw, D, 1)}, {L("w"), letter("v", D)}};
    CHECK(apply_morphism(bracket(a, b), m) == bracket(apply_morphism(a, m), apply_morphism(b, m)));
    CHECK(apply_morphism(bch(a, b), m) == bch(apply_morphism(a, m), apply_morphism(b, m)));
  }
}

TEST_CASE("bch associativity at degree 6") {
  std::mt19937_64 rng(6);
  std::vector<Letter> uv{L("u"), L("v")};
  auto a = random_lie(rng, uv, 6, 1), b = random_lie(rng, uv, 6, 1), c = random_lie(rng, uv, 6, 1);
  CHECK(bch(bch(a, b), c) == bch(a, bch(b, c)));
}

TEST_CASE("mixing truncation degrees is an error") {
  CHECK_THROWS_AS(bracket(letter("u", 2), letter("v", 3)), DegreeMismatch);
  CHECK_THROWS_AS(bch(letter("u", 2), letter("v", 3)), DegreeMismatch);
}
