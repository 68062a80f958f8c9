#pragma once

#include "kbh/kernels.hpp"
#include "kbh/series.hpp"

namespace kbh {

template <class C>
BasicAssocSeries<C> fa_mul(const BasicAssocSeries<C>& a, const BasicAssocSeries<C>& b) {
  return kernels::mul(a, b);
}

/// ab - ba
template <class C>
BasicAssocSeries<C> commutator(const BasicAssocSeries<C>& a, const BasicAssocSeries<C>& b);

/// Requires zero constant term.
template <class C>
BasicAssocSeries<C> fa_exp(const BasicAssocSeries<C>& a);
/// Requires constant term 1.
template <class C>
BasicAssocSeries<C> fa_log(const BasicAssocSeries<C>& a);

/// e^{sign * ad gamma}(x) = x + sign[gamma,x] + [gamma,[gamma,x]]/2 + ...
template <class C>
BasicAssocSeries<C> exp_ad(const BasicAssocSeries<C>& gamma, const BasicAssocSeries<C>& x, int sign = 1);

template <class C>
BasicAssocSeries<C> substitute(const BasicAssocSeries<C>& a, const LetterImages<C>& images) {
  return kernels::substitute(a, images);
}

/// The derivation sending letter u to image and every other letter to 0.
template <class C>
BasicAssocSeries<C> derive(const BasicAssocSeries<C>& a, Letter u, const BasicAssocSeries<C>& image);

/// Sum of c·w' over the terms c·w'u of a: the right quotient by the letter u.
template <class C>
BasicAssocSeries<C> right_quotient(const BasicAssocSeries<C>& a, Letter u);

template <class C>
BasicCyclicSeries<C> tr(const BasicAssocSeries<C>& a);

/// Removes the degree-1 wheels.
template <class C>
BasicCyclicSeries<C> cw_reduce(BasicCyclicSeries<C> w) {
  w.drop_grade(1);
  return w;
}

/// Letter substitution on cyclic words: substitute into a representative and
/// take the trace again.
template <class C>
BasicCyclicSeries<C> substitute(const BasicCyclicSeries<C>& w, const LetterImages<C>& images);
template <class C>
BasicCyclicSeries<C> derive(const BasicCyclicSeries<C>& w, Letter u, const BasicAssocSeries<C>& image);

/// Views a cyclic series as an associative one, one representative per wheel.
template <class C>
BasicAssocSeries<C> representatives(const BasicCyclicSeries<C>& w);

/// Multiplies every coefficient by the scalar polynomial f.
BasicAssocSeries<SPoly> lift(const AssocSeries& a, const SPoly& f);
/// Integrates each coefficient over s in [0,1].
CyclicSeries integrate(const BasicCyclicSeries<SPoly>& w);

}  // namespace kbh
