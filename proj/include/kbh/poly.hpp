#pragma once

#include "kbh/letter.hpp"
#include "kbh/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kbh {

/// Laurent monomial: (variable, nonzero exponent) pairs sorted by the letter order.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(Letter v, int e = 1);

  const std::vector<std::pair<Letter, int>>& exponents() const { return e_; }
  int exponent(Letter v) const;
  int total_degree() const;
  bool is_one() const { return e_.empty(); }
  /// All exponents non-negative.
  bool is_polynomial() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial inverse() const;
  /// Componentwise minimum (the gcd for Laurent monomials).
  static Monomial min(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  /// Graded lexicographic order.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<Letter, int>> e_;
};

/// Laurent polynomial with integer coefficients in commuting variables named by letters.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor): integers embed as constants
  Poly(const Z& c);  // NOLINT(google-explicit-constructor)
  static Poly monomial(const Monomial& m, const Z& c = Z(1));
  static Poly var(Letter v, int e = 1) { return monomial(Monomial::var(v, e)); }

  const std::map<Monomial, Z>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  /// Largest monomial in the graded-lex order and its coefficient; requires nonzero.
  const std::pair<const Monomial, Z>& leading() const { return *t_.rbegin(); }
  std::set<Letter> variables() const;
  /// Sum of the coefficients: the value at every variable = 1.
  Z at_one() const;
  /// gcd of the coefficients, positive; 0 for the zero polynomial.
  Z content() const;
  /// Componentwise minimum exponent over all terms.
  Monomial min_monomial() const;
  std::optional<Z> as_constant() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Z& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Z(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Z& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  Poly shifted(const Monomial& m) const;
  /// Divides every coefficient by c, which must divide them exactly.
  Poly divided_by(const Z& c) const;
  /// Variable substitution v -> to (possibly merging variables).
  Poly renamed(Letter v, Letter to) const;
  /// Variable v set to 1.
  Poly at_one(Letter v) const;

  /// Exact quotient a/b when b divides a as Laurent polynomials, else nullopt.
  static std::optional<Poly> exact_quotient(const Poly& a, const Poly& b);
  /// Greatest common divisor of two polynomials in at most one common variable,
  /// normalised to positive leading coefficient and no monomial factor.
  static Poly univariate_gcd(const Poly& a, const Poly& b);

  /// "-1 + 4*t - 8*t^2"; terms in increasing graded-lex order.
  std::string to_string(const std::function<std::string(Letter)>& name) const;

 private:
  void add_term(const Monomial& m, const Z& c);
  std::map<Monomial, Z> t_;
};

/// Fraction of Laurent polynomials kept in a reduced normal form: the
/// denominator has no monomial factor and positive leading coefficient, integer
/// content is cancelled, and common polynomial factors are cancelled exactly in
/// the one-variable case and whenever one side divides the other.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(Poly p) : num_(std::move(p)), den_(1) { normalize(); }  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// A Laurent polynomial when the denominator is 1.
  std::optional<Poly> as_poly() const;
  /// Value at every variable = 1; requires the denominator not to vanish there.
  Q at_one() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator-(RatFun a) { return a *= RatFun(-1); }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  /// Cross-multiplication, so it does not depend on how far reduction got.
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  RatFun renamed(Letter v, Letter to) const;
  RatFun at_one(Letter v) const;
  std::set<Letter> variables() const;

  std::string to_string(const std::function<std::string(Letter)>& name) const;

 private:
  void normalize();
  Poly num_, den_;
};

/// Parses sums, products, quotients, integer powers and parentheses of integers
/// and variables. resolve maps a variable token to its letter, or throws.
RatFun parse_ratfun(std::string_view text, const std::function<Letter(std::string_view)>& resolve);

}  // namespace kbh
