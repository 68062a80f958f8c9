#pragma once

#include "kbh/series.hpp"

#include <unordered_map>

namespace kbh {

/// Images of letters under an algebra morphism; letters not listed are fixed.
template <class C>
using LetterImages = std::unordered_map<Letter, BasicAssocSeries<C>>;

namespace kernels {

// The two hot loops of the engine: truncated products and substitution of
// series for letters. Each has an OpenMP version and a plain serial reference
// that is kept only to cross-check the parallel one and to benchmark against.

template <class C>
BasicAssocSeries<C> mul(const BasicAssocSeries<C>& a, const BasicAssocSeries<C>& b);
template <class C>
BasicAssocSeries<C> mul_reference(const BasicAssocSeries<C>& a, const BasicAssocSeries<C>& b);

/// Every image must have zero constant term.
template <class C>
BasicAssocSeries<C> substitute(const BasicAssocSeries<C>& a, const LetterImages<C>& images);
template <class C>
BasicAssocSeries<C> substitute_reference(const BasicAssocSeries<C>& a, const LetterImages<C>& images);

}  // namespace kernels
}  // namespace kbh
