#include "kbh/freealg.hpp"

namespace kbh {

template <class C>
BasicAssocSeries<C> commutator(const BasicAssocSeries<C>& a, const BasicAssocSeries<C>& b) {
  return fa_mul(a, b) - fa_mul(b, a);
}

template <class C>
BasicAssocSeries<C> fa_exp(const BasicAssocSeries<C>& a) {
  if (!is_zero(a.constant_term())) throw DomainError("exp of a series with nonzero constant term");
  const int D = a.degree();
  auto result = BasicAssocSeries<C>::one(D);
  auto power = BasicAssocSeries<C>::one(D);
  for (int k = 1; k <= D; ++k) {
    power = fa_mul(power, a) * Q(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

template <class C>
BasicAssocSeries<C> fa_log(const BasicAssocSeries<C>& a) {
  if (!(a.constant_term() == C(Q(1)))) throw DomainError("log of a series whose constant term is not 1");
  const int D = a.degree();
  auto x = a - BasicAssocSeries<C>::one(D);
  BasicAssocSeries<C> result(D);
  auto power = BasicAssocSeries<C>::one(D);
  for (int k = 1; k <= D; ++k) {
    power = fa_mul(power, x);
    if (power.is_zero()) break;
    result += power * Q(k % 2 == 1 ? 1 : -1, k);
  }
  return result;
}

template <class C>
BasicAssocSeries<C> exp_ad(const BasicAssocSeries<C>& gamma, const BasicAssocSeries<C>& x, int sign) {
  require_same_degree(gamma.degree(), x.degree());
  auto result = x;
  auto term = x;
  for (int k = 1; k <= x.degree(); ++k) {
    term = commutator(gamma, term) * Q(sign, k);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

template <class C>
BasicAssocSeries<C> derive(const BasicAssocSeries<C>& a, Letter u, const BasicAssocSeries<C>& image) {
  require_same_degree(a.degree(), image.degree());
  BasicAssocSeries<C> r(a.degree());
  const char16_t id = u.id();
  a.terms().for_each([&](const Word& w, const C& c) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != id) continue;
      int room = a.degree() - static_cast<int>(w.size()) + 1;
      Word head = w.substr(0, i), tail = w.substr(i + 1);
      for (int d = 0; d <= room; ++d)
        for (auto& [iw, ic] : image.grade(d)) r.add_term(head + iw + tail, c * ic);
    }
  });
  return r;
}

template <class C>
BasicAssocSeries<C> right_quotient(const BasicAssocSeries<C>& a, Letter u) {
  BasicAssocSeries<C> r(a.degree());
  a.terms().for_each([&](const Word& w, const C& c) {
    if (!w.empty() && w.back() == u.id()) r.add_term(w.substr(0, w.size() - 1), c);
  });
  return r;
}

template <class C>
BasicCyclicSeries<C> tr(const BasicAssocSeries<C>& a) {
  BasicCyclicSeries<C> r(a.degree());
  a.terms().for_each([&](const Word& w, const C& c) { r.add_term(w, c); });
  return r;
}

template <class C>
BasicAssocSeries<C> representatives(const BasicCyclicSeries<C>& w) {
  BasicAssocSeries<C> r(w.degree());
  w.terms().for_each([&](const Word& x, const C& c) { r.add_term(x, c); });
  return r;
}

template <class C>
BasicCyclicSeries<C> substitute(const BasicCyclicSeries<C>& w, const LetterImages<C>& images) {
  return tr(kernels::substitute(representatives(w), images));
}

template <class C>
BasicCyclicSeries<C> derive(const BasicCyclicSeries<C>& w, Letter u, const BasicAssocSeries<C>& image) {
  return tr(derive(representatives(w), u, image));
}

BasicAssocSeries<SPoly> lift(const AssocSeries& a, const SPoly& f) {
  BasicAssocSeries<SPoly> r(a.degree());
  a.terms().for_each([&](const Word& w, const Q& c) { r.add_term(w, f * c); });
  return r;
}

CyclicSeries integrate(const BasicCyclicSeries<SPoly>& w) {
  CyclicSeries r(w.degree());
  w.terms().for_each([&](const Word& x, const SPoly& c) { r.add_canonical(x, c.integrate()); });
  return r;
}

#define KBH_INSTANTIATE(C)                                                                               \
  template BasicAssocSeries<C> commutator(const BasicAssocSeries<C>&, const BasicAssocSeries<C>&);     \
  template BasicAssocSeries<C> fa_exp(const BasicAssocSeries<C>&);                                     \
  template BasicAssocSeries<C> fa_log(const BasicAssocSeries<C>&);                                     \
  template BasicAssocSeries<C> exp_ad(const BasicAssocSeries<C>&, const BasicAssocSeries<C>&, int);    \
  template BasicAssocSeries<C> derive(const BasicAssocSeries<C>&, Letter, const BasicAssocSeries<C>&); \
  template BasicAssocSeries<C> right_quotient(const BasicAssocSeries<C>&, Letter);                     \
  template BasicCyclicSeries<C> tr(const BasicAssocSeries<C>&);                                        \
  template BasicAssocSeries<C> representatives(const BasicCyclicSeries<C>&);                           \
  template BasicCyclicSeries<C> substitute(const BasicCyclicSeries<C>&, const LetterImages<C>&);       \
  template BasicCyclicSeries<C> derive(const BasicCyclicSeries<C>&, Letter, const BasicAssocSeries<C>&);

KBH_INSTANTIATE(Q)
KBH_INSTANTIATE(SPoly)
#undef KBH_INSTANTIATE

}  // namespace kbh
