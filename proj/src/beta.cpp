#include "kbh/beta.hpp"

#include "kbh/errors.hpp"

namespace kbh {
namespace {

void need_tail(const BetaElement& a, Letter u, const char* op) {
  if (!a.has_tail(u)) throw LabelError(std::string(op) + ": no tail '" + u.name() + "'");
}
void need_head(const BetaElement& a, Letter x, const char* op) {
  if (!a.has_head(x)) throw LabelError(std::string(op) + ": no head '" + x.name() + "'");
}
void need_distinct(Letter a, Letter b, const char* op) {
  if (a == b) throw LabelError(std::string(op) + ": labels must differ, got '" + a.name() + "' twice");
}

RatFun renamed_all(const RatFun& r, const std::map<Letter, Letter>& names) {
  RatFun out = r;
  for (auto& [from, to] : names) out = out.renamed(from, to);
  return out;
}

}  // namespace

std::string variable_name(Letter u) { return "t_" + u.name(); }

BetaElement::BetaElement(std::set<Letter> tails, std::set<Letter> heads, RatFun omega, std::map<Letter, Row> rows)
    : tails_(std::move(tails)), heads_(std::move(heads)), omega_(std::move(omega)) {
  if (omega_.at_one() != 1) throw DomainError("omega must be 1 at t = 1");
  for (auto& [u, row] : rows) {
    if (!tails_.count(u)) throw LabelError("row '" + u.name() + "' is not a tail");
    for (auto& [x, v] : row) {
      if (!heads_.count(x)) throw LabelError("column '" + x.name() + "' is not a head");
      if (v.at_one() != 0) throw DomainError("entry (" + u.name() + "," + x.name() + ") must vanish at t = 1");
      set(u, x, v);
    }
  }
}

BetaElement BetaElement::unit_t(Letter u) { return BetaElement({u}, {}, RatFun(1), {}); }

BetaElement BetaElement::unit_h(Letter x) { return BetaElement({}, {x}, RatFun(1), {}); }

BetaElement BetaElement::generator(int sign, Letter u, Letter x, std::optional<Letter> variable) {
  if (sign != 1 && sign != -1) throw DomainError("generator sign must be +1 or -1");
  BetaElement r({u}, {x}, RatFun(1), {});
  r.set(u, x, RatFun(Poly::var(variable.value_or(u), sign) - Poly(1)));
  return r;
}

RatFun BetaElement::entry(Letter u, Letter x) const {
  auto r = rows_.find(u);
  if (r == rows_.end()) return RatFun();
  auto e = r->second.find(x);
  return e == r->second.end() ? RatFun() : e->second;
}

void BetaElement::set(Letter u, Letter x, RatFun value) {
  if (value.is_zero()) {
    auto r = rows_.find(u);
    if (r == rows_.end()) return;
    r->second.erase(x);
    if (r->second.empty()) rows_.erase(r);
  } else {
    rows_[u][x] = std::move(value);
  }
}

bool operator==(const BetaElement& a, const BetaElement& b) {
  if (a.tails_ != b.tails_ || a.heads_ != b.heads_ || !(a.omega_ == b.omega_)) return false;
  if (a.rows_.size() != b.rows_.size()) return false;
  for (auto& [u, row] : a.rows_) {
    auto it = b.rows_.find(u);
    if (it == b.rows_.end() || it->second.size() != row.size()) return false;
    for (auto& [x, v] : row) {
      auto e = it->second.find(x);
      if (e == it->second.end() || !(e->second == v)) return false;
    }
  }
  return true;
}

BetaElement b_merge(const BetaElement& a, const BetaElement& b) {
  BetaElement r = a;
  for (Letter u : b.tails_)
    if (!r.tails_.insert(u).second) throw LabelError("merge: tail '" + u.name() + "' on both sides");
  for (Letter x : b.heads_)
    if (!r.heads_.insert(x).second) throw LabelError("merge: head '" + x.name() + "' on both sides");
  r.omega_ *= b.omega_;
  for (auto& [u, row] : b.rows_) r.rows_.emplace(u, row);
  return r;
}

BetaElement b_hm(const BetaElement& a, Letter x, Letter y, Letter z) {
  need_distinct(x, y, "hm");
  need_head(a, x, "hm");
  need_head(a, y, "hm");
  if (z != x && z != y && a.has_head(z)) throw LabelError("hm: head '" + z.name() + "' already exists");
  RatFun sum_alpha;
  for (auto& [u, row] : a.rows_)
    if (auto it = row.find(x); it != row.end()) sum_alpha += it->second;
  BetaElement r = a;
  r.heads_.erase(x);
  r.heads_.erase(y);
  r.heads_.insert(z);
  for (auto& [u, row] : a.rows_) {
    RatFun al = a.entry(u, x), be = a.entry(u, y);
    r.set(u, x, RatFun());
    r.set(u, y, RatFun());
    r.set(u, z, al + be + sum_alpha * be);
  }
  return r;
}

BetaElement b_tm(const BetaElement& a, Letter u, Letter v, Letter w) {
  need_distinct(u, v, "tm");
  need_tail(a, u, "tm");
  need_tail(a, v, "tm");
  if (w != u && w != v && a.has_tail(w)) throw LabelError("tm: tail '" + w.name() + "' already exists");
  const std::map<Letter, Letter> names{{u, w}, {v, w}};
  BetaElement r;
  r.tails_ = a.tails_;
  r.tails_.erase(u);
  r.tails_.erase(v);
  r.tails_.insert(w);
  r.heads_ = a.heads_;
  r.omega_ = renamed_all(a.omega_, names);
  BetaElement::Row merged;
  for (auto& [t, row] : a.rows_) {
    for (auto& [x, val] : row) {
      RatFun nv = renamed_all(val, names);
      if (t == u || t == v) {
        merged[x] += nv;
      } else {
        r.set(t, x, std::move(nv));
      }
    }
  }
  for (auto& [x, val] : merged) r.set(w, x, val);
  return r;
}

BetaElement b_tha(const BetaElement& a, Letter u, Letter x) {
  need_tail(a, u, "tha");
  need_head(a, x, "tha");
  const RatFun alpha = a.entry(u, x);
  const RatFun one_plus = RatFun(1) + alpha;
  if (one_plus.is_zero()) throw DomainError("tha: 1 + alpha vanishes");
  const RatFun f = RatFun(1) / one_plus;
  RatFun sum_gamma;
  for (auto& [t, row] : a.rows_)
    if (t != u)
      if (auto it = row.find(x); it != row.end()) sum_gamma += it->second;
  const RatFun g = RatFun(1) + sum_gamma * f;

  BetaElement r = a;
  r.omega_ *= one_plus;
  const BetaElement::Row beta = a.rows_.count(u) ? a.rows_.at(u) : BetaElement::Row{};
  for (auto& [t, row] : a.rows_) {
    if (t == u) {
      for (auto& [h, val] : row) r.set(u, h, val * g);
      continue;
    }
    auto gi = row.find(x);
    if (gi == row.end()) continue;
    const RatFun gf = gi->second * f;
    r.set(t, x, gf);
    for (auto& [h, bval] : beta)
      if (h != x) r.set(t, h, a.entry(t, h) - gf * bval);
  }
  return r;
}

BetaElement b_t_sigma(const BetaElement& a, Letter u, Letter v) {
  need_tail(a, u, "tsigma");
  if (u == v) return a;
  if (a.has_tail(v)) throw LabelError("tsigma: tail '" + v.name() + "' already exists");
  BetaElement r;
  r.tails_ = a.tails_;
  r.tails_.erase(u);
  r.tails_.insert(v);
  r.heads_ = a.heads_;
  r.omega_ = a.omega_.renamed(u, v);
  for (auto& [t, row] : a.rows_)
    for (auto& [x, val] : row) r.set(t == u ? v : t, x, val.renamed(u, v));
  return r;
}

BetaElement b_h_sigma(const BetaElement& a, Letter x, Letter y) {
  need_head(a, x, "hsigma");
  if (x == y) return a;
  if (a.has_head(y)) throw LabelError("hsigma: head '" + y.name() + "' already exists");
  BetaElement r = a;
  r.heads_.erase(x);
  r.heads_.insert(y);
  for (auto& [t, row] : a.rows_)
    if (auto it = row.find(x); it != row.end()) {
      r.set(t, x, RatFun());
      r.set(t, y, it->second);
    }
  return r;
}

BetaElement b_t_eta(const BetaElement& a, Letter u) {
  need_tail(a, u, "teta");
  BetaElement r;
  r.tails_ = a.tails_;
  r.tails_.erase(u);
  r.heads_ = a.heads_;
  r.omega_ = a.omega_.at_one(u);
  for (auto& [t, row] : a.rows_)
    if (t != u)
      for (auto& [x, val] : row) r.set(t, x, val.at_one(u));
  return r;
}

BetaElement b_h_eta(const BetaElement& a, Letter x) {
  need_head(a, x, "heta");
  BetaElement r = a;
  r.heads_.erase(x);
  for (auto& [t, row] : a.rows_) r.set(t, x, RatFun());
  return r;
}

BetaElement b_dm(const BetaElement& e, Letter a, Letter b, Letter c) {
  return b_hm(b_tm(b_tha(e, a, b), a, b, c), a, b, c);
}

bool is_unit_monomial(const RatFun& r) {
  if (r.num().size() != 1 || r.den().size() != 1) return false;
  auto& [nm, nc] = *r.num().terms().begin();
  auto& [dm, dc] = *r.den().terms().begin();
  (void)nm;
  (void)dm;
  return abs(nc) == abs(dc);
}

bool unit_equiv(const BetaElement& a, const BetaElement& b) {
  if (a.tails() != b.tails() || a.heads() != b.heads()) return false;
  if (a.omega().is_zero() || b.omega().is_zero()) return a.omega().is_zero() && b.omega().is_zero();
  if (!is_unit_monomial(a.omega() / b.omega())) return false;
  BetaElement bb(b.tails(), b.heads(), a.omega(), b.rows());
  return a == bb;
}

}  // namespace kbh
