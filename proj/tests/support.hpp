#pragma once

#include "kbh/cyclic.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace kbh::testing {

using TermList = std::vector<std::pair<std::string, Q>>;

inline Letter L(const char* name) { return Letter::of(name); }

inline AssocSeries fa(int D, const TermList& terms) {
  AssocSeries a(D);
  for (auto& [w, c] : terms) a.add_term(parse_word(w), c);
  return a;
}

inline CyclicSeries cw(int D, const TermList& terms) {
  CyclicSeries a(D);
  for (auto& [w, c] : terms) a.add_term(parse_word(w), c);
  return a;
}

inline LieSeries lie(int D, const TermList& terms) {
  LieSeries a(D);
  for (auto& [w, c] : terms) a.add_term(parse_word(w), c);
  return a;
}

inline LieSeries letter(const char* name, int D) { return LieSeries::letter(Letter::of(name), D); }

/// Small nonzero rationals p/q with |p| <= 3, q <= 3.
inline Q small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  int p = 0;
  while (p == 0) p = num(rng);
  Q q(p, den(rng));
  q.canonicalize();
  return q;
}

inline Word random_word(std::mt19937_64& rng, const std::vector<Letter>& alphabet, int length) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(alphabet[pick(rng)].id());
  return w;
}

/// Random Lie series: a few Lyndon basis terms at every degree up to D.
inline LieSeries random_lie(std::mt19937_64& rng, const std::vector<Letter>& alphabet, int D, int per_degree = 2) {
  auto basis = lyndon_words(alphabet, D);
  LieSeries a(D);
  for (int d = 1; d <= D; ++d) {
    std::vector<Word> here;
    for (auto& w : basis)
      if (static_cast<int>(w.size()) == d) here.push_back(w);
    std::uniform_int_distribution<std::size_t> pick(0, here.size() - 1);
    for (int k = 0; k < per_degree; ++k) a.add_term(here[pick(rng)], small_rational(rng));
  }
  return a;
}

/// Random associative series without constant term.
inline AssocSeries random_fa(std::mt19937_64& rng, const std::vector<Letter>& alphabet, int D, int per_degree = 3) {
  AssocSeries a(D);
  for (int d = 1; d <= D; ++d)
    for (int k = 0; k < per_degree; ++k) a.add_term(random_word(rng, alphabet, d), small_rational(rng));
  return a;
}

/// Independent noncommutative polynomial arithmetic on strings of
/// one-character letters, used to check the library's products.
using NcPoly = std::map<std::string, Q>;

inline NcPoly nc_mul(const NcPoly& a, const NcPoly& b, std::size_t D) {
  NcPoly r;
  for (auto& [x, c] : a)
    for (auto& [y, d] : b)
      if (x.size() + y.size() <= D) r[x + y] += c * d;
  std::erase_if(r, [](auto& kv) { return is_zero(kv.second); });
  return r;
}

inline NcPoly nc_add(NcPoly a, const NcPoly& b, const Q& f = Q(1)) {
  for (auto& [y, d] : b) a[y] += f * d;
  std::erase_if(a, [](auto& kv) { return is_zero(kv.second); });
  return a;
}

inline AssocSeries from_nc(const NcPoly& p, int D) {
  AssocSeries a(D);
  for (auto& [w, c] : p) a.add_term(parse_word(w.empty() ? std::string() : w), c);
  return a;
}

}  // namespace kbh::testing
