#pragma once

#include "kbh/lie.hpp"

namespace kbh {

/// sigma_u(gamma): right quotient of iota(gamma) by u, since
/// iota(lambda) = sum over letters v of sigma_v(lambda) v.
AssocSeries sigma_u(Letter u, const LieSeries& gamma);
/// The defining recursion on standard bracketings. Reference implementation.
AssocSeries sigma_u_recursive(Letter u, const LieSeries& gamma);

/// tr(u sigma_u(gamma)): the trace of the words of iota(gamma) that end in u.
CyclicSeries div_u(Letter u, const LieSeries& gamma);
template <class C>
BasicCyclicSeries<C> div_u(Letter u, const BasicAssocSeries<C>& iota_gamma);

/// Integral over s in [0,1] of div_u(gamma RC_u^{s gamma}) C_u^{-s gamma},
/// computed with coefficients polynomial in s. Not reduced modulo degree 1.
CyclicSeries J_u(Letter u, const LieSeries& gamma);

/// Letter substitution by Lie series on wheels.
CyclicSeries apply_morphism(const CyclicSeries& w, const LetterMap& m);
CyclicSeries conj_C(Letter u, const LieSeries& gamma, const CyclicSeries& w);
CyclicSeries conj_RC(Letter u, const LieSeries& gamma, const CyclicSeries& w);
/// The derivation u -> [gamma,u] on wheels.
CyclicSeries ad_u(Letter u, const LieSeries& gamma, const CyclicSeries& w);

}  // namespace kbh
