#include "kbh/kernels.hpp"

#include <omp.h>

namespace kbh::kernels {
namespace {

template <class C>
std::vector<std::pair<const Word*, const C*>> flatten(const GradedTerms<C>& t) {
  std::vector<std::pair<const Word*, const C*>> out;
  out.reserve(t.size());
  t.for_each([&](const Word& w, const C& c) { out.emplace_back(&w, &c); });
  return out;
}

// Partial sums are collected per thread and folded in a fixed thread order so
// the result does not depend on scheduling.
template <class C, class Body>
GradedTerms<C> parallel_accumulate(int degree, std::size_t n, Body body) {
  int threads = omp_get_max_threads();
  if (n < 64) threads = 1;
  std::vector<GradedTerms<C>> partial(static_cast<std::size_t>(threads), GradedTerms<C>(degree));
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::size_t i = 0; i < n; ++i) body(i, partial[static_cast<std::size_t>(omp_get_thread_num())]);
  GradedTerms<C> out = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t) out.accumulate(partial[t], Q(1));
  return out;
}

template <class C>
void multiply_into(GradedTerms<C>& out, const Word& wa, const C& ca, const BasicAssocSeries<C>& b) {
  int room = b.degree() - static_cast<int>(wa.size());
  for (int d = 0; d <= room; ++d) {
    for (auto& [wb, cb] : b.grade(d)) out.add(wa + wb, ca * cb);
  }
}

}  // namespace

template <class C>
BasicAssocSeries<C> mul(const BasicAssocSeries<C>& a, const BasicAssocSeries<C>& b) {
  require_same_degree(a.degree(), b.degree());
  auto left = flatten(a.terms());
  BasicAssocSeries<C> r(a.degree());
  r.terms() = parallel_accumulate<C>(a.degree(), left.size(), [&](std::size_t i, GradedTerms<C>& acc) {
    multiply_into(acc, *left[i].first, *left[i].second, b);
  });
  return r;
}

template <class C>
BasicAssocSeries<C> mul_reference(const BasicAssocSeries<C>& a, const BasicAssocSeries<C>& b) {
  require_same_degree(a.degree(), b.degree());
  BasicAssocSeries<C> r(a.degree());
  for (int i = 0; i <= a.degree(); ++i)
    for (auto& [wa, ca] : a.grade(i))
      for (int j = 0; i + j <= a.degree(); ++j)
        for (auto& [wb, cb] : b.grade(j)) r.add_term(wa + wb, ca * cb);
  return r;
}

namespace {

template <class C>
struct ImageTable {
  // Terms of each substituted letter's image; letters absent here are fixed.
  std::unordered_map<char16_t, std::vector<std::pair<Word, C>>> terms;
  std::unordered_map<char16_t, int> min_degree;

  ImageTable(const LetterImages<C>& images, int degree) {
    for (auto& [l, img] : images) {
      require_same_degree(img.degree(), degree);
      if (!is_zero(img.constant_term())) throw DomainError("substituted image has a constant term");
      auto& v = terms[l.id()];
      img.terms().for_each([&](const Word& w, const C& c) { v.emplace_back(w, c); });
      min_degree[l.id()] = img.terms().min_grade();
    }
  }
  int min_of(char16_t id) const {
    auto it = min_degree.find(id);
    return it == min_degree.end() ? 1 : it->second;
  }
};

template <class C>
void expand_word(GradedTerms<C>& out, const Word& w, const C& c, const ImageTable<C>& table, int degree) {
  const std::size_t n = w.size();
  std::vector<int> tail_min(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) tail_min[k] = tail_min[k + 1] + table.min_of(w[k]);
  if (tail_min[0] > degree) return;

  std::vector<std::pair<Word, C>> partial{{Word{}, c}}, next;
  for (std::size_t k = 0; k < n; ++k) {
    next.clear();
    auto it = table.terms.find(w[k]);
    for (auto& [pw, pc] : partial) {
      if (it == table.terms.end()) {
        Word x = pw;
        x.push_back(w[k]);
        next.emplace_back(std::move(x), pc);
        continue;
      }
      int room = degree - static_cast<int>(pw.size()) - tail_min[k + 1];
      for (auto& [iw, ic] : it->second) {
        if (static_cast<int>(iw.size()) > room) continue;
        next.emplace_back(pw + iw, pc * ic);
      }
    }
    std::swap(partial, next);
    if (partial.empty()) return;
  }
  for (auto& [pw, pc] : partial) out.add(pw, pc);
}

}  // namespace

template <class C>
BasicAssocSeries<C> substitute(const BasicAssocSeries<C>& a, const LetterImages<C>& images) {
  ImageTable<C> table(images, a.degree());
  auto src = flatten(a.terms());
  BasicAssocSeries<C> r(a.degree());
  r.terms() = parallel_accumulate<C>(a.degree(), src.size(), [&](std::size_t i, GradedTerms<C>& acc) {
    expand_word(acc, *src[i].first, *src[i].second, table, a.degree());
  });
  return r;
}

template <class C>
BasicAssocSeries<C> substitute_reference(const BasicAssocSeries<C>& a, const LetterImages<C>& images) {
  for (auto& [l, img] : images) {
    require_same_degree(img.degree(), a.degree());
    if (!is_zero(img.constant_term())) throw DomainError("substituted image has a constant term");
  }
  BasicAssocSeries<C> r(a.degree());
  a.terms().for_each([&](const Word& w, const C& c) {
    auto prod = BasicAssocSeries<C>::constant(c, a.degree());
    for (char16_t id : w) {
      Letter l = Letter::from_id(id);
      auto it = images.find(l);
      prod = mul_reference(prod, it == images.end() ? BasicAssocSeries<C>::letter(l, a.degree()) : it->second);
    }
    r += prod;
  });
  return r;
}

template BasicAssocSeries<Q> mul(const BasicAssocSeries<Q>&, const BasicAssocSeries<Q>&);
template BasicAssocSeries<SPoly> mul(const BasicAssocSeries<SPoly>&, const BasicAssocSeries<SPoly>&);
template BasicAssocSeries<Q> mul_reference(const BasicAssocSeries<Q>&, const BasicAssocSeries<Q>&);
template BasicAssocSeries<SPoly> mul_reference(const BasicAssocSeries<SPoly>&, const BasicAssocSeries<SPoly>&);
template BasicAssocSeries<Q> substitute(const BasicAssocSeries<Q>&, const LetterImages<Q>&);
template BasicAssocSeries<SPoly> substitute(const BasicAssocSeries<SPoly>&, const LetterImages<SPoly>&);
template BasicAssocSeries<Q> substitute_reference(const BasicAssocSeries<Q>&, const LetterImages<Q>&);
template BasicAssocSeries<SPoly> substitute_reference(const BasicAssocSeries<SPoly>&, const LetterImages<SPoly>&);

}  // namespace kbh::kernels
