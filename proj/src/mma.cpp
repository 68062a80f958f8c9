#include "kbh/mma.hpp"

#include <vector>

namespace kbh {
namespace {

void need_tail(const MMAElement& a, Letter u, const char* op) {
  if (!a.has_tail(u)) throw LabelError(std::string(op) + ": no tail '" + u.name() + "'");
}
void need_head(const MMAElement& a, Letter x, const char* op) {
  if (!a.has_head(x)) throw LabelError(std::string(op) + ": no head '" + x.name() + "'");
}
void need_distinct(Letter a, Letter b, const char* op) {
  if (a == b) throw LabelError(std::string(op) + ": labels must differ, got '" + a.name() + "' twice");
}

bool only_letters_in(const std::set<Letter>& allowed, const GradedTerms<Q>& t) {
  bool ok = true;
  t.for_each([&](const Word& w, const Q&) {
    for (char16_t id : w)
      if (!allowed.count(Letter::from_id(id))) ok = false;
  });
  return ok;
}

// Applies f to every head value; heads are independent so this runs in parallel.
template <class F>
std::map<Letter, LieSeries> map_heads(const std::map<Letter, LieSeries>& lambda, F f) {
  std::vector<std::pair<Letter, const LieSeries*>> items;
  for (auto& [x, l] : lambda) items.emplace_back(x, &l);
  std::vector<LieSeries> out(items.size());
#pragma omp parallel for schedule(dynamic, 1) if (items.size() > 1)
  for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(*items[i].second);
  std::map<Letter, LieSeries> r;
  for (std::size_t i = 0; i < items.size(); ++i) r.emplace(items[i].first, std::move(out[i]));
  return r;
}

std::map<Letter, LieSeries> substitute_heads(const std::map<Letter, LieSeries>& lambda, const LetterImages<Q>& images) {
  return map_heads(lambda, [&](const LieSeries& l) { return to_lie(substitute(iota(l), images)); });
}

LetterImages<Q> rename(Letter from, Letter to, int degree) { return {{from, AssocSeries::letter(to, degree)}}; }

}  // namespace

MMAElement::MMAElement(int degree, std::set<Letter> tails, std::map<Letter, LieSeries> lambda, CyclicSeries omega)
    : tails_(std::move(tails)), lambda_(std::move(lambda)), omega_(std::move(omega)), degree_(degree) {
  require_same_degree(omega_.degree(), degree_);
  if (degree_ >= 1 && !omega_.grade(1).empty()) throw DomainError("omega has degree-1 wheels");
  if (!only_letters_in(tails_, omega_.terms())) throw DomainError("omega uses a letter that is not a tail");
  for (auto& [x, l] : lambda_) {
    require_same_degree(l.degree(), degree_);
    if (!only_letters_in(tails_, l.terms())) throw DomainError("lambda_" + x.name() + " uses a letter that is not a tail");
  }
}

MMAElement MMAElement::unit_t(Letter u, int degree) { return MMAElement(degree, {u}, {}, CyclicSeries(degree)); }

MMAElement MMAElement::unit_h(Letter x, int degree) {
  return MMAElement(degree, {}, {{x, LieSeries(degree)}}, CyclicSeries(degree));
}

MMAElement MMAElement::generator(int sign, Letter u, Letter x, int degree) {
  if (sign != 1 && sign != -1) throw DomainError("generator sign must be +1 or -1");
  return MMAElement(degree, {u}, {{x, LieSeries::letter(u, degree, Q(sign))}}, CyclicSeries(degree));
}

const LieSeries& MMAElement::lambda(Letter x) const {
  auto it = lambda_.find(x);
  if (it == lambda_.end()) throw LabelError("no head '" + x.name() + "'");
  return it->second;
}

MMAElement merge(const MMAElement& a, const MMAElement& b) {
  require_same_degree(a.degree(), b.degree());
  MMAElement r = a;
  for (Letter u : b.tails_)
    if (!r.tails_.insert(u).second) throw LabelError("merge: tail '" + u.name() + "' on both sides");
  for (auto& [x, l] : b.lambda_)
    if (!r.lambda_.emplace(x, l).second) throw LabelError("merge: head '" + x.name() + "' on both sides");
  r.omega_ += b.omega_;
  return r;
}

MMAElement hm(const MMAElement& a, Letter x, Letter y, Letter z) {
  need_distinct(x, y, "hm");
  need_head(a, x, "hm");
  need_head(a, y, "hm");
  if (z != x && z != y && a.has_head(z)) throw LabelError("hm: head '" + z.name() + "' already exists");
  MMAElement r = a;
  LieSeries joined = bch(a.lambda_.at(x), a.lambda_.at(y));
  r.lambda_.erase(x);
  r.lambda_.erase(y);
  r.lambda_.emplace(z, std::move(joined));
  return r;
}

MMAElement tm(const MMAElement& a, Letter u, Letter v, Letter w) {
  need_distinct(u, v, "tm");
  need_tail(a, u, "tm");
  need_tail(a, v, "tm");
  if (w != u && w != v && a.has_tail(w)) throw LabelError("tm: tail '" + w.name() + "' already exists");
  const int D = a.degree();
  LetterImages<Q> images;
  if (u != w) images.emplace(u, AssocSeries::letter(w, D));
  if (v != w) images.emplace(v, AssocSeries::letter(w, D));
  MMAElement r = a;
  r.tails_.erase(u);
  r.tails_.erase(v);
  r.tails_.insert(w);
  r.lambda_ = substitute_heads(a.lambda_, images);
  r.omega_ = substitute(a.omega_, images);
  return r;
}

MMAElement tha(const MMAElement& a, Letter u, Letter x) {
  need_tail(a, u, "tha");
  need_head(a, x, "tha");
  const LieSeries& gamma = a.lambda_.at(x);
  if (gamma.is_zero()) return a;
  const auto x_image = rc_image(u, iota(gamma));
  const LetterImages<Q> images{{u, x_image}};
  MMAElement r = a;
  r.omega_ = cw_reduce(substitute(cw_reduce(a.omega_ + J_u(u, gamma)), images));
  r.lambda_ = substitute_heads(a.lambda_, images);
  return r;
}

MMAElement t_sigma(const MMAElement& a, Letter u, Letter v) {
  need_tail(a, u, "tsigma");
  if (u == v) return a;
  if (a.has_tail(v)) throw LabelError("tsigma: tail '" + v.name() + "' already exists");
  const auto images = rename(u, v, a.degree());
  MMAElement r = a;
  r.tails_.erase(u);
  r.tails_.insert(v);
  r.lambda_ = substitute_heads(a.lambda_, images);
  r.omega_ = substitute(a.omega_, images);
  return r;
}

MMAElement h_sigma(const MMAElement& a, Letter x, Letter y) {
  need_head(a, x, "hsigma");
  if (x == y) return a;
  if (a.has_head(y)) throw LabelError("hsigma: head '" + y.name() + "' already exists");
  MMAElement r = a;
  auto node = r.lambda_.extract(x);
  node.key() = y;
  r.lambda_.insert(std::move(node));
  return r;
}

MMAElement t_eta(const MMAElement& a, Letter u) {
  need_tail(a, u, "teta");
  const LetterImages<Q> images{{u, AssocSeries(a.degree())}};
  MMAElement r = a;
  r.tails_.erase(u);
  r.lambda_ = substitute_heads(a.lambda_, images);
  r.omega_ = substitute(a.omega_, images);
  return r;
}

MMAElement h_eta(const MMAElement& a, Letter x) {
  need_head(a, x, "heta");
  MMAElement r = a;
  r.lambda_.erase(x);
  return r;
}

MMAElement dm(const MMAElement& e, Letter a, Letter b, Letter c) {
  return hm(tm(tha(e, a, b), a, b, c), a, b, c);
}

}  // namespace kbh
