#include "kbh/identities.hpp"

#include <algorithm>

namespace kbh {
namespace {

using random::Rng;

Letter L(const char* name) { return Letter::of(name); }

void tally(CheckResult& r, bool ok, const std::string& where) {
  ++r.trials;
  if (!ok && r.passed) {
    r.passed = false;
    r.detail = "fails on " + where;
  }
}

std::string trial_name(int t) { return "trial " + std::to_string(t); }

struct MMAOps {
  using E = MMAElement;
  int D;
  E random(Rng& rng, const std::vector<Letter>& t, const std::vector<Letter>& h) const {
    return random::random_mma(rng, t, h, D);
  }
  E gen(int s, Letter u, Letter x) const { return MMAElement::generator(s, u, x, D); }
  E ut(Letter u) const { return MMAElement::unit_t(u, D); }
  E uh(Letter x) const { return MMAElement::unit_h(x, D); }
  static E merge(const E& a, const E& b) { return kbh::merge(a, b); }
  static E hm(const E& a, Letter x, Letter y, Letter z) { return kbh::hm(a, x, y, z); }
  static E tm(const E& a, Letter u, Letter v, Letter w) { return kbh::tm(a, u, v, w); }
  static E tha(const E& a, Letter u, Letter x) { return kbh::tha(a, u, x); }
  static E ts(const E& a, Letter u, Letter v) { return t_sigma(a, u, v); }
  static E hs(const E& a, Letter x, Letter y) { return h_sigma(a, x, y); }
  static E te(const E& a, Letter u) { return t_eta(a, u); }
  static E he(const E& a, Letter x) { return h_eta(a, x); }
  static E dm(const E& e, Letter a, Letter b, Letter c) { return kbh::dm(e, a, b, c); }
  static bool fi_equal(const E& a, const E& b) { return a == b; }
};

struct BetaOps {
  using E = BetaElement;
  E random(Rng& rng, const std::vector<Letter>& t, const std::vector<Letter>& h) const {
    return random::random_beta(rng, t, h);
  }
  E gen(int s, Letter u, Letter x) const { return BetaElement::generator(s, u, x); }
  E ut(Letter u) const { return BetaElement::unit_t(u); }
  E uh(Letter x) const { return BetaElement::unit_h(x); }
  static E merge(const E& a, const E& b) { return b_merge(a, b); }
  static E hm(const E& a, Letter x, Letter y, Letter z) { return b_hm(a, x, y, z); }
  static E tm(const E& a, Letter u, Letter v, Letter w) { return b_tm(a, u, v, w); }
  static E tha(const E& a, Letter u, Letter x) { return b_tha(a, u, x); }
  static E ts(const E& a, Letter u, Letter v) { return b_t_sigma(a, u, v); }
  static E hs(const E& a, Letter x, Letter y) { return b_h_sigma(a, x, y); }
  static E te(const E& a, Letter u) { return b_t_eta(a, u); }
  static E he(const E& a, Letter x) { return b_h_eta(a, x); }
  static E dm(const E& e, Letter a, Letter b, Letter c) { return b_dm(e, a, b, c); }
  static bool fi_equal(const E& a, const E& b) { return unit_equiv(a, b); }
};

template <class Ops>
Checks axioms(const Ops& ops, Rng& rng, int trials) {
  const Letter u = L("u"), v = L("v"), w = L("w"), x = L("x"), y = L("y"), z = L("z"), p = L("p"), q = L("q");
  CheckResult hassoc{"hassoc"}, tassoc{"tassoc"}, thatha{"thatha"}, taction{"taction"}, haction{"haction"},
      units{"unit laws"}, dmassoc{"dm associativity"};
  for (int t = 0; t < trials; ++t) {
    const auto where = trial_name(t);
    const auto e = ops.random(rng, {u, v, w}, {x, y, z});
    tally(hassoc, Ops::hm(Ops::hm(e, x, y, x), x, z, x) == Ops::hm(Ops::hm(e, y, z, y), x, y, x), where);
    tally(tassoc, Ops::tm(Ops::tm(e, u, v, u), u, w, u) == Ops::tm(Ops::tm(e, v, w, v), u, v, u), where);
    tally(thatha, Ops::tha(Ops::tha(e, u, x), v, y) == Ops::tha(Ops::tha(e, v, y), u, x), where);
    tally(taction, Ops::tha(Ops::tm(e, u, v, p), p, x) == Ops::tm(Ops::tha(Ops::tha(e, u, x), v, x), u, v, p), where);
    tally(haction, Ops::tha(Ops::hm(e, x, y, q), u, q) == Ops::hm(Ops::tha(Ops::tha(e, u, x), u, y), x, y, q), where);

    const auto small = ops.random(rng, {v, w}, {y, z});
    const auto with_t = Ops::merge(ops.ut(u), small);
    const auto with_h = Ops::merge(ops.uh(x), small);
    tally(units,
          Ops::tm(with_t, u, v, p) == Ops::ts(small, v, p) && Ops::tm(with_t, v, u, p) == Ops::ts(small, v, p) &&
              Ops::hm(with_h, x, y, q) == Ops::hs(small, y, q) && Ops::hm(with_h, y, x, q) == Ops::hs(small, y, q),
          where);

    const auto strands = ops.random(rng, {u, v, w}, {u, v, w});
    tally(dmassoc,
          Ops::dm(Ops::dm(strands, u, v, u), u, w, u) == Ops::dm(Ops::dm(strands, v, w, v), u, v, u), where);
  }
  return {hassoc, tassoc, thatha, taction, haction, units, dmassoc};
}

template <class Ops>
Checks relations(const Ops& ops, Rng& rng, int trials) {
  const Letter u = L("u"), v = L("v"), w = L("w"), x = L("x"), y = L("y"), z = L("z"), p = L("p");
  CheckResult relabel{"relabelling"}, cut{"cutting and puncturing"}, inverses{"inverses"},
      commut{"tail-commutativity"}, fi{"framing independence"};
  for (int s : {1, -1}) {
    const auto where = s > 0 ? std::string("rho+") : std::string("rho-");
    tally(relabel, Ops::ts(Ops::hs(ops.gen(s, u, x), x, y), u, v) == ops.gen(s, v, y), where);
    tally(cut, Ops::he(ops.gen(s, u, x), x) == ops.ut(u), where + " heta");
    tally(cut, Ops::te(ops.gen(s, u, x), u) == ops.uh(x), where + " teta");
    tally(fi, Ops::fi_equal(Ops::tha(ops.gen(s, u, x), u, x), ops.gen(s, u, x)), where);
  }
  tally(inverses,
        Ops::hm(Ops::tm(Ops::merge(ops.gen(1, u, x), ops.gen(-1, v, y)), u, v, w), x, y, z) ==
            Ops::merge(ops.ut(w), ops.uh(z)),
        "rho+ rho-");

  Checks out{relabel, cut, inverses};
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      CheckResult conj{std::string("conjugation ") + (s1 > 0 ? "+" : "-") + (s2 > 0 ? "+" : "-")};
      auto lhs = Ops::merge(Ops::merge(ops.gen(s1, u, x), ops.gen(s2, v, y)), ops.gen(s2, w, z));
      lhs = Ops::tha(Ops::hm(Ops::tm(lhs, v, w, v), x, y, x), u, z);
      auto rhs = Ops::merge(Ops::merge(ops.gen(s2, v, x), ops.gen(s2, w, z)), ops.gen(s1, u, y));
      rhs = Ops::hm(Ops::tm(rhs, v, w, v), x, y, x);
      tally(conj, lhs == rhs, "generators");
      out.push_back(conj);
    }
  for (int t = 0; t < trials; ++t) {
    const auto e = ops.random(rng, {u, v, w}, {x, y});
    tally(commut, Ops::tm(e, u, v, p) == Ops::tm(e, v, u, p), trial_name(t));
  }
  out.push_back(commut);
  out.push_back(fi);
  return out;
}

std::vector<Q> vandermonde_weights(const std::vector<Q>& nodes, const std::vector<Q>& target) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[k][i] = 1;
    for (std::size_t e = 0; e < k; ++e)
      for (std::size_t i = 0; i < n; ++i) m[k][i] *= nodes[i];
    m[k][n] = target[k];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (is_zero(m[piv][col])) ++piv;
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      Q f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Q> wts(n);
  for (std::size_t i = 0; i < n; ++i) wts[i] = m[i][n] / m[i][i];
  return wts;
}

LetterMap merge_map(Letter u, Letter v, Letter w, int D) {
  return {{u, LieSeries::letter(w, D)}, {v, LieSeries::letter(w, D)}};
}

}  // namespace

Checks mma_axioms(Rng& rng, int D, int trials) { return axioms(MMAOps{D}, rng, trials); }

Checks mma_relations(Rng& rng, int D, int trials) { return relations(MMAOps{D}, rng, trials); }

Checks beta_axioms(Rng& rng, int trials) { return axioms(BetaOps{}, rng, trials); }

Checks beta_relations(Rng& rng, int trials) { return relations(BetaOps{}, rng, trials); }

Checks j_identities(Rng& rng, int D, int trials) {
  const Letter u = L("u"), v = L("v"), w = L("w"), p = L("p");
  const std::vector<Letter> uvw{u, v, w};
  CheckResult jh{"JhProperty"}, juv{"JuvProperty"}, jt{"JtProperty"}, lin{"linear term of J is div"},
      trivial{"J(0) = 0 and J_u(v) = 0"};

  // d/de J_u(e g) at e = 0 by exact interpolation through e = 0..D.
  std::vector<Q> nodes, target(static_cast<std::size_t>(D) + 1);
  for (int i = 0; i <= D; ++i) nodes.emplace_back(i);
  target[1] = 1;
  const auto slope_weights = vandermonde_weights(nodes, target);

  for (int t = 0; t < trials; ++t) {
    const auto where = trial_name(t);
    const auto a = random::random_lie(rng, uvw, D), b = random::random_lie(rng, uvw, D);
    tally(jh, J_u(u, bch(a, b)) == J_u(u, a) + conj_C(u, a, J_u(u, conj_RC(u, a, b))), where);
    tally(juv,
          J_u(u, a) - conj_C(v, b, J_u(u, conj_RC(v, b, a))) == J_u(v, b) - conj_C(u, a, J_u(v, conj_RC(u, a, b))),
          where);
    const auto m = merge_map(u, v, p, D);
    tally(jt,
          J_u(p, apply_morphism(a, m)) == apply_morphism(J_u(u, a) + conj_C(u, a, J_u(v, conj_RC(u, a, a))), m),
          where);
    CyclicSeries slope(D);
    for (std::size_t i = 0; i < nodes.size(); ++i) slope += J_u(u, a * nodes[i]) * slope_weights[i];
    tally(lin, slope == div_u(u, a), where);
  }
  tally(trivial, J_u(u, LieSeries(D)).is_zero() && J_u(u, LieSeries::letter(v, D)).is_zero(), "constants");
  return {jh, juv, jt, lin, trivial};
}

Checks div_identities(Rng& rng, int D, int trials) {
  const Letter u = L("u"), v = L("v"), w = L("w"), p = L("p");
  const std::vector<Letter> uvw{u, v, w};
  CheckResult same{"div cocycle, u = v"}, diff{"div cocycle, u != v"}, additive{"div additive under tm"};
  for (int t = 0; t < trials; ++t) {
    const auto where = trial_name(t);
    const auto a = random::random_lie(rng, uvw, D), b = random::random_lie(rng, uvw, D);
    for (auto [x, y] : {std::pair{u, u}, std::pair{u, v}}) {
      auto lhs = ad_u(y, b, div_u(x, a)) - ad_u(x, a, div_u(y, b));
      auto rhs = div_u(x, ad_u(y, b, a)) - div_u(y, ad_u(x, a, b));
      if (x == y) rhs += div_u(x, bracket(a, b));
      tally(x == y ? same : diff, lhs == rhs, where);
    }
    const auto m = merge_map(u, v, p, D);
    tally(additive, div_u(p, apply_morphism(a, m)) == apply_morphism(div_u(u, a) + div_u(v, a), m), where);
  }
  return {same, diff, additive};
}

bool all_passed(const Checks& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace kbh
