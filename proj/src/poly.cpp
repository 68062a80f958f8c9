#include "kbh/poly.hpp"

#include "kbh/errors.hpp"

#include <algorithm>
#include <cctype>

namespace kbh {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Letter v, int e) {
  Monomial m;
  if (e != 0) m.e_.emplace_back(v, e);
  return m;
}

int Monomial::exponent(Letter v) const {
  for (auto& [l, e] : e_)
    if (l == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [l, e] : e_) d += e;
  return d;
}

bool Monomial::is_polynomial() const {
  return std::all_of(e_.begin(), e_.end(), [](auto& p) { return p.second >= 0; });
}

namespace {

// Walks the union of variables of a and b in letter order.
template <class F>
void merge_walk(const std::vector<std::pair<Letter, int>>& a, const std::vector<std::pair<Letter, int>>& b, F f) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      if (!f(a[i].first, a[i].second, 0)) return;
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (!f(b[j].first, 0, b[j].second)) return;
      ++j;
    } else {
      if (!f(a[i].first, a[i].second, b[j].second)) return;
      ++i;
      ++j;
    }
  }
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  merge_walk(a.e_, b.e_, [&](Letter l, int x, int y) {
    if (x + y != 0) r.e_.emplace_back(l, x + y);
    return true;
  });
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& p : r.e_) p.second = -p.second;
  return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  merge_walk(a.e_, b.e_, [&](Letter l, int x, int y) {
    int m = std::min(x, y);
    if (m != 0) r.e_.emplace_back(l, m);
    return true;
  });
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  bool less = false;
  merge_walk(a.e_, b.e_, [&](Letter, int x, int y) {
    if (x == y) return true;
    less = x < y;
    return false;
  });
  return less;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) t_.emplace(Monomial(), Z(c));
}

Poly::Poly(const Z& c) {
  if (sgn(c) != 0) t_.emplace(Monomial(), c);
}

Poly Poly::monomial(const Monomial& m, const Z& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Z& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

std::set<Letter> Poly::variables() const {
  std::set<Letter> out;
  for (auto& [m, c] : t_)
    for (auto& [l, e] : m.exponents()) out.insert(l);
  return out;
}

Z Poly::at_one() const {
  Z s;
  for (auto& [m, c] : t_) s += c;
  return s;
}

Z Poly::content() const {
  Z g;
  for (auto& [m, c] : t_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Monomial Poly::min_monomial() const {
  if (t_.empty()) return Monomial();
  Monomial r = t_.begin()->first;
  for (auto& [m, c] : t_) r = Monomial::min(r, m);
  return r;
}

std::optional<Z> Poly::as_constant() const {
  if (t_.empty()) return Z(0);
  if (t_.size() == 1 && t_.begin()->first.is_one()) return t_.begin()->second;
  return std::nullopt;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Z& c) {
  if (sgn(c) == 0) {
    t_.clear();
  } else {
    for (auto& [m, x] : t_) x *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r;
  for (auto& [x, c] : t_) r.t_.emplace_hint(r.t_.end(), x * m, c);
  return r;
}

Poly Poly::divided_by(const Z& c) const {
  Poly r = *this;
  for (auto& [m, x] : r.t_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw InternalError("inexact integer division of a polynomial");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Poly Poly::renamed(Letter v, Letter to) const {
  if (v == to) return *this;
  Poly r;
  for (auto& [m, c] : t_) {
    int e = m.exponent(v);
    if (e == 0) {
      r.add_term(m, c);
    } else {
      r.add_term(m * Monomial::var(v, -e) * Monomial::var(to, e), c);
    }
  }
  return r;
}

Poly Poly::at_one(Letter v) const {
  Poly r;
  for (auto& [m, c] : t_) {
    int e = m.exponent(v);
    r.add_term(e == 0 ? m : m * Monomial::var(v, -e), c);
  }
  return r;
}

std::optional<Poly> Poly::exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return Poly();
  const Monomial ma = a.min_monomial(), mb = b.min_monomial();
  Poly r = a.shifted(ma.inverse());
  const Poly d = b.shifted(mb.inverse());
  const auto& [lead_m, lead_c] = d.leading();
  Poly q;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    Monomial m = rm * lead_m.inverse();
    if (!m.is_polynomial() || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Z c;
    mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    Poly t = monomial(m, c);
    q += t;
    r -= t * d;
  }
  return q.shifted(ma * mb.inverse());
}

namespace {

using Dense = std::vector<Z>;  // coefficient of v^k at index k

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Z dense_content(const Dense& p) {
  Z g;
  for (auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Dense primitive(Dense p) {
  trim(p);
  if (p.empty()) return p;
  Z g = dense_content(p);
  if (sgn(p.back()) < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

Dense pseudo_remainder(Dense a, const Dense& b) {
  const Z& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Z la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

}  // namespace

Poly Poly::univariate_gcd(const Poly& a, const Poly& b) {
  std::set<Letter> vars = a.variables();
  for (Letter l : b.variables()) vars.insert(l);
  if (vars.size() > 1) throw DomainError("univariate_gcd on more than one variable");
  if (a.is_zero() && b.is_zero()) return Poly();
  if (vars.empty()) return Poly(1);
  const Letter v = *vars.begin();
  auto to_dense = [&](const Poly& p) {
    Dense d;
    Poly s = p.shifted(p.min_monomial().inverse());
    for (auto& [m, c] : s.t_) {
      auto k = static_cast<std::size_t>(m.exponent(v));
      if (d.size() <= k) d.resize(k + 1);
      d[k] = c;
    }
    return d;
  };
  Dense x = primitive(to_dense(a)), y = primitive(to_dense(b));
  if (x.empty()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = primitive(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  x = primitive(std::move(x));
  Poly g;
  for (std::size_t k = 0; k < x.size(); ++k) g.add_term(Monomial::var(v, static_cast<int>(k)), x[k]);
  return g;
}

std::string Poly::to_string(const std::function<std::string(Letter)>& name) const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : t_) {
    Z mag = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (auto& [l, e] : m.exponents()) {
      if (!mono.empty()) mono += "*";
      mono += name(l);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

// ------------------------------------------------------------------ RatFun

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFun::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Monomial shift = den_.min_monomial().inverse();
  den_ = den_.shifted(shift);
  num_ = num_.shifted(shift);

  if (!den_.as_constant()) {
    std::set<Letter> vars = num_.variables();
    for (Letter l : den_.variables()) vars.insert(l);
    if (vars.size() <= 1) {
      Poly g = Poly::univariate_gcd(num_, den_);
      if (!g.as_constant()) {
        num_ = *Poly::exact_quotient(num_, g);
        den_ = *Poly::exact_quotient(den_, g);
        Monomial again = den_.min_monomial().inverse();
        den_ = den_.shifted(again);
        num_ = num_.shifted(again);
      }
    } else if (auto q = Poly::exact_quotient(num_, den_)) {
      num_ = std::move(*q);
      den_ = Poly(1);
    }
  }

  Z g = num_.content();
  Z dc = den_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dc.get_mpz_t());
  if (g != 1) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
  if (sgn(den_.leading().second) < 0) {
    num_ *= Z(-1);
    den_ *= Z(-1);
  }
}

bool RatFun::is_one() const { return num_ == den_; }

std::optional<Poly> RatFun::as_poly() const {
  auto c = den_.as_constant();
  if (c && *c == 1) return num_;
  return std::nullopt;
}

Q RatFun::at_one() const {
  Z d = den_.at_one();
  if (sgn(d) == 0) throw DomainError("denominator vanishes at t = 1");
  Q r(num_.at_one(), d);
  r.canonicalize();
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFun RatFun::renamed(Letter v, Letter to) const { return RatFun(num_.renamed(v, to), den_.renamed(v, to)); }

RatFun RatFun::at_one(Letter v) const { return RatFun(num_.at_one(v), den_.at_one(v)); }

std::set<Letter> RatFun::variables() const {
  auto vars = num_.variables();
  for (Letter l : den_.variables()) vars.insert(l);
  return vars;
}

std::string RatFun::to_string(const std::function<std::string(Letter)>& name) const {
  auto wrap = [&](const Poly& p) {
    std::string s = p.to_string(name);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  if (auto c = den_.as_constant(); c && *c == 1) return num_.to_string(name);
  return wrap(num_) + "/" + wrap(den_);
}

// ----------------------------------------------------------------- parsing

namespace {

class RatFunParser {
 public:
  RatFunParser(std::string_view text, const std::function<Letter(std::string_view)>& resolve)
      : s_(text), resolve_(resolve) {}

  RatFun parse() {
    RatFun r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("rational function '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun r = term();
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RatFun term() {
    RatFun r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        r /= unary();
      } else {
        return r;
      }
    }
  }

  RatFun unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFun power() {
    skip();
    std::optional<Letter> var;
    RatFun base;
    if (eat('(')) {
      base = expr();
      if (!eat(')')) fail("missing ')'");
    } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base = RatFun(Poly(Z(std::string(s_.substr(start, pos_ - start)))));
    } else if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      var = resolve_(s_.substr(start, pos_ - start));
      base = RatFun(Poly::var(*var));
    } else {
      fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    }
    if (!eat('^')) return base;
    int e = exponent();
    if (var) return RatFun(Poly::var(*var, e));
    RatFun r(1);
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return e < 0 ? RatFun(1) / r : r;
  }

  int exponent() {
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("missing exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("missing ')' after exponent");
    return neg ? -e : e;
  }

  std::string_view s_;
  const std::function<Letter(std::string_view)>& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(std::string_view text, const std::function<Letter(std::string_view)>& resolve) {
  return RatFunParser(text, resolve).parse();
}

}  // namespace kbh
