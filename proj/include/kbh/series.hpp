#pragma once

#include "kbh/errors.hpp"
#include "kbh/letter.hpp"
#include "kbh/rational.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kbh {

/// Polynomial in a formal scalar s with rational coefficients; c[k] multiplies s^k.
class SPoly {
 public:
  SPoly() = default;
  SPoly(const Q& q) {  // NOLINT(google-explicit-constructor): scalars embed as constants
    if (!kbh::is_zero(q)) c_.push_back(q);
  }
  static SPoly s() {
    SPoly p;
    p.c_ = {Q(0), Q(1)};
    return p;
  }

  int s_degree() const { return static_cast<int>(c_.size()) - 1; }
  const Q& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<Q>& coefficients() const { return c_; }

  /// Integral over s in [0,1].
  Q integrate() const {
    Q r;
    for (std::size_t k = 0; k < c_.size(); ++k) r += c_[k] / Q(static_cast<long>(k + 1));
    return r;
  }
  Q evaluate(const Q& s) const {
    Q r;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * s + c_[k];
    return r;
  }

  SPoly& operator+=(const SPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  SPoly& operator-=(const SPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  SPoly& operator*=(const Q& q) {
    if (kbh::is_zero(q)) {
      c_.clear();
    } else {
      for (auto& x : c_) x *= q;
    }
    return *this;
  }
  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  friend SPoly operator*(SPoly a, const Q& q) { return a *= q; }
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator-(SPoly a) { return a *= Q(-1); }
  friend bool operator==(const SPoly& a, const SPoly& b) { return a.c_ == b.c_; }
  friend bool is_zero(const SPoly& p) { return p.c_.empty(); }

 private:
  void trim() {
    while (!c_.empty() && kbh::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Q> c_;
};

template <class C>
using TermMap = std::unordered_map<Word, C, WordHash>;

/// Word-indexed coefficients split by word length 0..D. Zero coefficients are
/// never stored and words longer than D are silently dropped on insertion,
/// which is what every truncated product wants.
template <class C>
class GradedTerms {
 public:
  GradedTerms() : grades_(1) {}
  explicit GradedTerms(int degree) : grades_(static_cast<std::size_t>(check(degree)) + 1) {}

  int degree() const { return static_cast<int>(grades_.size()) - 1; }
  const TermMap<C>& grade(int d) const { return grades_[static_cast<std::size_t>(d)]; }

  void add(const Word& w, const C& c) {
    if (static_cast<int>(w.size()) > degree() || is_zero(c)) return;
    auto& g = grades_[w.size()];
    auto [it, fresh] = g.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) g.erase(it);
    }
  }
  void add_scaled(const Word& w, const C& c, const Q& factor) { add(w, c * factor); }

  C coeff(const Word& w) const {
    if (static_cast<int>(w.size()) > degree()) return C{};
    auto& g = grades_[w.size()];
    auto it = g.find(w);
    return it == g.end() ? C{} : it->second;
  }

  bool empty() const {
    return std::all_of(grades_.begin(), grades_.end(), [](const TermMap<C>& g) { return g.empty(); });
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto& g : grades_) n += g.size();
    return n;
  }
  /// Lowest grade with a nonzero term, or degree()+1 when zero.
  int min_grade() const {
    for (int d = 0; d <= degree(); ++d)
      if (!grades_[static_cast<std::size_t>(d)].empty()) return d;
    return degree() + 1;
  }

  void scale(const Q& q) {
    if (kbh::is_zero(q)) {
      for (auto& g : grades_) g.clear();
      return;
    }
    for (auto& g : grades_)
      for (auto& [w, c] : g) c *= q;
  }
  void accumulate(const GradedTerms& o, const Q& factor) {
    if (o.degree() != degree()) throw DegreeMismatch(mismatch(o.degree()));
    for (auto& g : o.grades_)
      for (auto& [w, c] : g) add(w, c * factor);
  }
  void clear_grade(int d) { grades_[static_cast<std::size_t>(d)].clear(); }

  template <class F>
  void for_each(F&& f) const {
    for (auto& g : grades_)
      for (auto& [w, c] : g) f(w, c);
  }

  /// Terms in shortlex word order; for rendering and deterministic iteration.
  std::vector<std::pair<Word, C>> sorted() const {
    std::vector<std::pair<Word, C>> out;
    out.reserve(size());
    for (auto& g : grades_)
      for (auto& [w, c] : g) out.emplace_back(w, c);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return word_shortlex_less(a.first, b.first); });
    return out;
  }

  friend bool operator==(const GradedTerms& a, const GradedTerms& b) {
    return a.grades_ == b.grades_;
  }

  std::string mismatch(int other) const {
    return "truncation degree mismatch: " + std::to_string(degree()) + " vs " + std::to_string(other);
  }

 private:
  static int check(int degree) {
    if (degree < 0) throw DomainError("negative truncation degree");
    return degree;
  }
  std::vector<TermMap<C>> grades_;
};

inline void require_same_degree(int a, int b) {
  if (a != b) throw DegreeMismatch("truncation degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

/// Element of the completed free associative algebra, truncated at degree D.
template <class C>
class BasicAssocSeries {
 public:
  BasicAssocSeries() = default;
  explicit BasicAssocSeries(int degree) : terms_(degree) {}

  static BasicAssocSeries constant(const C& c, int degree) {
    BasicAssocSeries a(degree);
    a.terms_.add(Word{}, c);
    return a;
  }
  static BasicAssocSeries one(int degree) { return constant(C(Q(1)), degree); }
  static BasicAssocSeries letter(Letter l, int degree, const C& c = C(Q(1))) {
    BasicAssocSeries a(degree);
    a.terms_.add(word_of(l), c);
    return a;
  }

  int degree() const { return terms_.degree(); }
  const GradedTerms<C>& terms() const { return terms_; }
  GradedTerms<C>& terms() { return terms_; }
  const TermMap<C>& grade(int d) const { return terms_.grade(d); }

  void add_term(const Word& w, const C& c) { terms_.add(w, c); }
  C coeff(const Word& w) const { return terms_.coeff(w); }
  C constant_term() const { return terms_.coeff(Word{}); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Keeps grades lo..hi only.
  BasicAssocSeries grades(int lo, int hi) const {
    BasicAssocSeries r(degree());
    for (int d = std::max(lo, 0); d <= std::min(hi, degree()); ++d)
      for (auto& [w, c] : grade(d)) r.terms_.add(w, c);
    return r;
  }

  BasicAssocSeries& operator+=(const BasicAssocSeries& o) {
    terms_.accumulate(o.terms_, Q(1));
    return *this;
  }
  BasicAssocSeries& operator-=(const BasicAssocSeries& o) {
    terms_.accumulate(o.terms_, Q(-1));
    return *this;
  }
  BasicAssocSeries& operator*=(const Q& q) {
    terms_.scale(q);
    return *this;
  }
  friend BasicAssocSeries operator+(BasicAssocSeries a, const BasicAssocSeries& b) { return a += b; }
  friend BasicAssocSeries operator-(BasicAssocSeries a, const BasicAssocSeries& b) { return a -= b; }
  friend BasicAssocSeries operator-(BasicAssocSeries a) { return a *= Q(-1); }
  friend BasicAssocSeries operator*(BasicAssocSeries a, const Q& q) { return a *= q; }
  friend BasicAssocSeries operator*(const Q& q, BasicAssocSeries a) { return a *= q; }
  friend bool operator==(const BasicAssocSeries& a, const BasicAssocSeries& b) {
    return a.degree() == b.degree() && a.terms_ == b.terms_;
  }

 private:
  GradedTerms<C> terms_;
};

/// Series of cyclic words: every stored word is its own minimal rotation and
/// there is no constant term.
template <class C>
class BasicCyclicSeries {
 public:
  BasicCyclicSeries() = default;
  explicit BasicCyclicSeries(int degree) : terms_(degree) {}

  int degree() const { return terms_.degree(); }
  const GradedTerms<C>& terms() const { return terms_; }
  const TermMap<C>& grade(int d) const { return terms_.grade(d); }

  /// Accepts any representative; it is rotated into canonical form.
  void add_term(const Word& w, const C& c) {
    if (w.empty()) return;
    terms_.add(canonical_rotation(w), c);
  }
  /// Caller guarantees w is already canonical.
  void add_canonical(const Word& w, const C& c) { terms_.add(w, c); }
  C coeff(const Word& w) const { return terms_.coeff(canonical_rotation(w)); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void drop_grade(int d) {
    if (d >= 0 && d <= degree()) terms_.clear_grade(d);
  }

  BasicCyclicSeries& operator+=(const BasicCyclicSeries& o) {
    terms_.accumulate(o.terms_, Q(1));
    return *this;
  }
  BasicCyclicSeries& operator-=(const BasicCyclicSeries& o) {
    terms_.accumulate(o.terms_, Q(-1));
    return *this;
  }
  BasicCyclicSeries& operator*=(const Q& q) {
    terms_.scale(q);
    return *this;
  }
  friend BasicCyclicSeries operator+(BasicCyclicSeries a, const BasicCyclicSeries& b) { return a += b; }
  friend BasicCyclicSeries operator-(BasicCyclicSeries a, const BasicCyclicSeries& b) { return a -= b; }
  friend BasicCyclicSeries operator-(BasicCyclicSeries a) { return a *= Q(-1); }
  friend BasicCyclicSeries operator*(BasicCyclicSeries a, const Q& q) { return a *= q; }
  friend bool operator==(const BasicCyclicSeries& a, const BasicCyclicSeries& b) {
    return a.degree() == b.degree() && a.terms_ == b.terms_;
  }

 private:
  GradedTerms<C> terms_;
};

using AssocSeries = BasicAssocSeries<Q>;
using CyclicSeries = BasicCyclicSeries<Q>;

}  // namespace kbh
