#include "kbh/cyclic.hpp"

namespace kbh {

AssocSeries sigma_u(Letter u, const LieSeries& gamma) { return right_quotient(iota(gamma), u); }

namespace {

AssocSeries sigma_of_lyndon(Letter u, const Word& w, int D) {
  if (w.size() == 1) return w[0] == u.id() ? AssocSeries::one(D) : AssocSeries(D);
  auto [left, right] = standard_factorization(w);
  auto l = LieSeries(D), r = LieSeries(D);
  l.add_term(left, Q(1));
  r.add_term(right, Q(1));
  return fa_mul(iota(l), sigma_of_lyndon(u, right, D)) - fa_mul(iota(r), sigma_of_lyndon(u, left, D));
}

}  // namespace

AssocSeries sigma_u_recursive(Letter u, const LieSeries& gamma) {
  AssocSeries r(gamma.degree());
  gamma.terms().for_each([&](const Word& w, const Q& c) { r += sigma_of_lyndon(u, w, gamma.degree()) * c; });
  return r;
}

template <class C>
BasicCyclicSeries<C> div_u(Letter u, const BasicAssocSeries<C>& iota_gamma) {
  BasicCyclicSeries<C> r(iota_gamma.degree());
  iota_gamma.terms().for_each([&](const Word& w, const C& c) {
    if (!w.empty() && w.back() == u.id()) r.add_term(w, c);
  });
  return r;
}

template BasicCyclicSeries<Q> div_u(Letter, const BasicAssocSeries<Q>&);
template BasicCyclicSeries<SPoly> div_u(Letter, const BasicAssocSeries<SPoly>&);

CyclicSeries div_u(Letter u, const LieSeries& gamma) { return div_u(u, iota(gamma)); }

CyclicSeries J_u(Letter u, const LieSeries& gamma) {
  const int D = gamma.degree();
  if (!gamma.letters().count(u)) return CyclicSeries(D);
  const auto g = iota(gamma);
  const auto sg = lift(g, SPoly::s());
  const auto U = BasicAssocSeries<SPoly>::letter(u, D);
  // gamma RC_u^{s gamma}: substitute the RC image of u into gamma itself.
  const auto x = rc_image(u, sg);
  const auto moved = kernels::substitute(lift(g, SPoly(Q(1))), LetterImages<SPoly>{{u, x}});
  const auto integrand = substitute(div_u(u, moved), LetterImages<SPoly>{{u, exp_ad(sg, U, -1)}});
  return integrate(integrand);
}

CyclicSeries apply_morphism(const CyclicSeries& w, const LetterMap& m) { return substitute(w, images_of(m)); }

CyclicSeries conj_C(Letter u, const LieSeries& gamma, const CyclicSeries& w) {
  require_same_degree(gamma.degree(), w.degree());
  auto y = exp_ad(iota(gamma), AssocSeries::letter(u, w.degree()), -1);
  return substitute(w, LetterImages<Q>{{u, y}});
}

CyclicSeries conj_RC(Letter u, const LieSeries& gamma, const CyclicSeries& w) {
  require_same_degree(gamma.degree(), w.degree());
  if (gamma.is_zero()) return w;
  return substitute(w, LetterImages<Q>{{u, rc_image(u, iota(gamma))}});
}

CyclicSeries ad_u(Letter u, const LieSeries& gamma, const CyclicSeries& w) {
  require_same_degree(gamma.degree(), w.degree());
  auto image = iota(bracket(gamma, LieSeries::letter(u, w.degree())));
  return derive(w, u, image);
}

}  // namespace kbh
