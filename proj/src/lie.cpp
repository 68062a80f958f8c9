#include "kbh/lie.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace kbh {

LieSeries LieSeries::letter(Letter l, int degree, const Q& c) {
  LieSeries a(degree);
  a.add_term(word_of(l), c);
  return a;
}

void LieSeries::add_term(const Word& w, const Q& c) {
  if (!is_lyndon(w)) throw DomainError("'" + render_word(w) + "' is not a Lyndon word");
  terms_.add(w, c);
}

LieSeries LieSeries::grades(int lo, int hi) const {
  LieSeries r(degree());
  for (int d = std::max(lo, 0); d <= std::min(hi, degree()); ++d)
    for (auto& [w, c] : grade(d)) r.terms_.add(w, c);
  return r;
}

std::set<Letter> LieSeries::letters() const {
  std::set<Letter> out;
  terms_.for_each([&](const Word& w, const Q&) {
    for (char16_t id : w) out.insert(Letter::from_id(id));
  });
  return out;
}

std::vector<Word> lyndon_words(std::vector<Letter> alphabet, int d) {
  if (alphabet.empty()) throw DomainError("Lyndon words over an empty alphabet");
  if (d < 1) throw DomainError("Lyndon words need length bound >= 1");
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  // Duval's generation in lexicographic order, over letter indices.
  const int k = static_cast<int>(alphabet.size());
  std::vector<Word> out;
  std::vector<int> w{0};
  while (!w.empty()) {
    Word word;
    for (int i : w) word.push_back(alphabet[static_cast<std::size_t>(i)].id());
    out.push_back(std::move(word));
    std::size_t m = w.size();
    while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
  return out;
}

namespace {

class ExpansionCache {
 public:
  const std::vector<std::pair<Word, Q>>& get(const Word& w) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(w);
      if (it != cache_.end()) return it->second;
    }
    std::vector<std::pair<Word, Q>> value;
    if (w.size() == 1) {
      value.emplace_back(w, Q(1));
    } else {
      auto [left, right] = standard_factorization(w);
      const auto& l = get(left);
      const auto& r = get(right);
      TermMap<Q> acc;
      auto add = [&](const Word& x, const Q& c) {
        auto [it, fresh] = acc.try_emplace(x, c);
        if (!fresh) it->second += c;
      };
      for (auto& [lw, lc] : l)
        for (auto& [rw, rc] : r) {
          add(lw + rw, lc * rc);
          add(rw + lw, -lc * rc);
        }
      for (auto& [x, c] : acc)
        if (!is_zero(c)) value.emplace_back(x, c);
    }
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(w, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<Word, std::vector<std::pair<Word, Q>>, WordHash> cache_;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

}  // namespace

const std::vector<std::pair<Word, Q>>& lyndon_expansion(const Word& lyndon) {
  return expansion_cache().get(lyndon);
}

std::string bracket_form(const Word& lyndon) {
  if (lyndon.size() == 1) return Letter::from_id(lyndon[0]).name();
  auto [left, right] = standard_factorization(lyndon);
  return "[" + bracket_form(left) + "," + bracket_form(right) + "]";
}

AssocSeries iota(const LieSeries& a) {
  AssocSeries r(a.degree());
  a.terms().for_each([&](const Word& w, const Q& c) {
    for (auto& [x, k] : lyndon_expansion(w)) r.add_term(x, c * k);
  });
  return r;
}

LieSeries to_lie(const AssocSeries& a) {
  LieSeries r(a.degree());
  if (!a.grade(0).empty()) throw InternalError("non-Lie residue: constant term");
  for (int d = 1; d <= a.degree(); ++d) {
    // The standard bracketing of a Lyndon word w is w plus lexicographically
    // larger words, so the smallest surviving word always names the next basis element.
    std::map<Word, Q, WordLess> pending(a.grade(d).begin(), a.grade(d).end());
    while (!pending.empty()) {
      auto first = pending.begin();
      Word w = first->first;
      Q c = first->second;
      if (!is_lyndon(w)) throw InternalError("non-Lie residue at word '" + render_word(w) + "'");
      r.terms_.add(w, c);
      for (auto& [x, k] : lyndon_expansion(w)) {
        auto [it, fresh] = pending.try_emplace(x, -c * k);
        if (!fresh) {
          it->second -= c * k;
          if (is_zero(it->second)) pending.erase(it);
        }
      }
      if (pending.count(w)) throw InternalError("Lyndon expansion does not lead with its own word");
    }
  }
  return r;
}

LieSeries bracket(const LieSeries& a, const LieSeries& b) {
  require_same_degree(a.degree(), b.degree());
  if (a.is_zero() || b.is_zero()) return LieSeries(a.degree());
  return to_lie(commutator(iota(a), iota(b)));
}

LieSeries bch(const LieSeries& a, const LieSeries& b) {
  require_same_degree(a.degree(), b.degree());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return to_lie(fa_log(fa_mul(fa_exp(iota(a)), fa_exp(iota(b)))));
}

LetterImages<Q> images_of(const LetterMap& m) {
  LetterImages<Q> out;
  for (auto& [l, img] : m) out.emplace(l, iota(img));
  return out;
}

LieSeries apply_morphism(const LieSeries& a, const LetterMap& m) {
  for (auto& [l, img] : m) require_same_degree(a.degree(), img.degree());
  return to_lie(substitute(iota(a), images_of(m)));
}

template <class C>
BasicAssocSeries<C> rc_image(Letter u, const BasicAssocSeries<C>& gamma) {
  const int D = gamma.degree();
  const auto U = BasicAssocSeries<C>::letter(u, D);
  auto x = U;
  // Each round fixes at least one more degree; D rounds reach degree D and one
  // more confirms the fixpoint.
  for (int round = 0; round <= D + 1; ++round) {
    auto g = kernels::substitute(gamma, LetterImages<C>{{u, x}});
    auto next = exp_ad(g, U, 1);
    if (next == x) return x;
    x = std::move(next);
  }
  throw InternalError("RC fixpoint did not stabilise within D+1 rounds");
}

template BasicAssocSeries<Q> rc_image(Letter, const BasicAssocSeries<Q>&);
template BasicAssocSeries<SPoly> rc_image(Letter, const BasicAssocSeries<SPoly>&);

LieSeries conj_C(Letter u, const LieSeries& gamma, const LieSeries& a) {
  require_same_degree(gamma.degree(), a.degree());
  auto y = exp_ad(iota(gamma), AssocSeries::letter(u, a.degree()), -1);
  return to_lie(substitute(iota(a), LetterImages<Q>{{u, y}}));
}

LieSeries conj_RC(Letter u, const LieSeries& gamma, const LieSeries& a) {
  require_same_degree(gamma.degree(), a.degree());
  if (gamma.is_zero()) return a;
  auto x = rc_image(u, iota(gamma));
  return to_lie(substitute(iota(a), LetterImages<Q>{{u, x}}));
}

LieSeries conj_RC_stable(Letter u, const LieSeries& gamma, const LieSeries& a) {
  require_same_degree(gamma.degree(), a.degree());
  const int D = a.degree();
  const Letter bar = u.temporary();
  const LetterImages<Q> step{{u, exp_ad(iota(gamma), AssocSeries::letter(bar, D), 1)}};
  auto s = iota(a);
  int rounds = 0;
  for (;;) {
    auto next = kernels::substitute_reference(s, step);
    if (next == s) break;
    s = std::move(next);
    if (++rounds > D + 1) throw InternalError("stable application did not stabilise");
  }
  return to_lie(kernels::substitute_reference(s, LetterImages<Q>{{bar, AssocSeries::letter(u, D)}}));
}

LieSeries ad_u(Letter u, const LieSeries& gamma, const LieSeries& a) {
  require_same_degree(gamma.degree(), a.degree());
  auto image = iota(bracket(gamma, LieSeries::letter(u, a.degree())));
  return to_lie(derive(iota(a), u, image));
}

}  // namespace kbh
