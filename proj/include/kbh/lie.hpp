#pragma once

#include "kbh/freealg.hpp"

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace kbh {

/// Element of the completed free Lie algebra in the Lyndon basis: the key w
/// stands for the standard bracketing P_w of the Lyndon word w.
class LieSeries {
 public:
  LieSeries() = default;
  explicit LieSeries(int degree) : terms_(degree) {}
  static LieSeries letter(Letter l, int degree, const Q& c = Q(1));

  int degree() const { return terms_.degree(); }
  const GradedTerms<Q>& terms() const { return terms_; }
  const TermMap<Q>& grade(int d) const { return terms_.grade(d); }

  /// w must be a Lyndon word.
  void add_term(const Word& w, const Q& c);
  Q coeff(const Word& w) const { return terms_.coeff(w); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LieSeries grades(int lo, int hi) const;
  std::set<Letter> letters() const;

  LieSeries& operator+=(const LieSeries& o) {
    terms_.accumulate(o.terms_, Q(1));
    return *this;
  }
  LieSeries& operator-=(const LieSeries& o) {
    terms_.accumulate(o.terms_, Q(-1));
    return *this;
  }
  LieSeries& operator*=(const Q& q) {
    terms_.scale(q);
    return *this;
  }
  friend LieSeries operator+(LieSeries a, const LieSeries& b) { return a += b; }
  friend LieSeries operator-(LieSeries a, const LieSeries& b) { return a -= b; }
  friend LieSeries operator-(LieSeries a) { return a *= Q(-1); }
  friend LieSeries operator*(LieSeries a, const Q& q) { return a *= q; }
  friend LieSeries operator*(const Q& q, LieSeries a) { return a *= q; }
  friend bool operator==(const LieSeries& a, const LieSeries& b) {
    return a.degree() == b.degree() && a.terms_ == b.terms_;
  }

 private:
  friend LieSeries to_lie(const AssocSeries& a);
  GradedTerms<Q> terms_;
};

/// All Lyndon words of length <= d over the alphabet, by length then lexicographically.
std::vector<Word> lyndon_words(std::vector<Letter> alphabet, int d);

/// Expansion of the standard bracketing of a Lyndon word in the free
/// associative algebra. Cached process-wide; safe to call concurrently.
const std::vector<std::pair<Word, Q>>& lyndon_expansion(const Word& lyndon);
/// "[u,[u,v]]" for the Lyndon word uuv.
std::string bracket_form(const Word& lyndon);

AssocSeries iota(const LieSeries& a);
/// Inverse of iota on primitive elements. A surviving non-Lie residue raises InternalError.
LieSeries to_lie(const AssocSeries& a);

LieSeries bracket(const LieSeries& a, const LieSeries& b);
LieSeries bch(const LieSeries& a, const LieSeries& b);

/// Letter to Lie series; absent letters are fixed, the zero series deletes.
using LetterMap = std::unordered_map<Letter, LieSeries>;
LieSeries apply_morphism(const LieSeries& a, const LetterMap& m);
LetterImages<Q> images_of(const LetterMap& m);

/// The image x of u under RC_u^gamma, computed as the fixpoint of
/// x = e^{ad gamma[u:=x]}(u). gamma is given in associative form.
template <class C>
BasicAssocSeries<C> rc_image(Letter u, const BasicAssocSeries<C>& gamma);

/// Applies C_u^{-gamma}: u -> e^{-ad gamma}(u).
LieSeries conj_C(Letter u, const LieSeries& gamma, const LieSeries& a);
/// Applies RC_u^{gamma}, the inverse of C_u^{-gamma}.
LieSeries conj_RC(Letter u, const LieSeries& gamma, const LieSeries& a);
/// RC_u^{gamma} by stable application of u -> e^{ad gamma}(u~) with a
/// temporary letter u~, then renaming u~ back to u. Reference implementation.
LieSeries conj_RC_stable(Letter u, const LieSeries& gamma, const LieSeries& a);

/// The derivation u -> [gamma,u], other letters -> 0.
LieSeries ad_u(Letter u, const LieSeries& gamma, const LieSeries& a);

}  // namespace kbh
