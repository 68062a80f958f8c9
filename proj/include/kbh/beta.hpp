#pragma once

#include "kbh/poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace kbh {

/// Element of the beta quotient: omega and a tails x heads matrix of rational
/// functions in one variable t_u per tail u. The variable of tail u is the
/// letter u itself; it renders as "t_u". Zero entries are not stored.
/// Sewing evaluations may instead use one variable per final strand, so
/// variables are not required to be tails.
class BetaElement {
 public:
  using Row = std::map<Letter, RatFun>;

  BetaElement() : omega_(1) {}
  /// Validates labels and the normalization omega(1) = 1, entries(1) = 0.
  BetaElement(std::set<Letter> tails, std::set<Letter> heads, RatFun omega, std::map<Letter, Row> rows);

  static BetaElement unit_t(Letter u);
  static BetaElement unit_h(Letter x);
  /// entry t^{+-1} - 1 with t = t_u unless another variable is given
  static BetaElement generator(int sign, Letter u, Letter x, std::optional<Letter> variable = std::nullopt);

  const std::set<Letter>& tails() const { return tails_; }
  const std::set<Letter>& heads() const { return heads_; }
  const RatFun& omega() const { return omega_; }
  const std::map<Letter, Row>& rows() const { return rows_; }
  RatFun entry(Letter u, Letter x) const;
  bool has_tail(Letter u) const { return tails_.count(u) != 0; }
  bool has_head(Letter x) const { return heads_.count(x) != 0; }

  friend bool operator==(const BetaElement& a, const BetaElement& b);

 private:
  friend BetaElement b_merge(const BetaElement&, const BetaElement&);
  friend BetaElement b_hm(const BetaElement&, Letter, Letter, Letter);
  friend BetaElement b_tm(const BetaElement&, Letter, Letter, Letter);
  friend BetaElement b_tha(const BetaElement&, Letter, Letter);
  friend BetaElement b_t_sigma(const BetaElement&, Letter, Letter);
  friend BetaElement b_h_sigma(const BetaElement&, Letter, Letter);
  friend BetaElement b_t_eta(const BetaElement&, Letter);
  friend BetaElement b_h_eta(const BetaElement&, Letter);

  void set(Letter u, Letter x, RatFun value);

  std::set<Letter> tails_, heads_;
  RatFun omega_;
  std::map<Letter, Row> rows_;
};

/// Block-diagonal union; omegas multiply.
BetaElement b_merge(const BetaElement& a, const BetaElement& b);
/// Columns x,y replaced by z = alpha + beta + <alpha> beta.
BetaElement b_hm(const BetaElement& a, Letter x, Letter y, Letter z);
/// Rows u,v added into row w, then t_u,t_v -> t_w everywhere.
BetaElement b_tm(const BetaElement& a, Letter u, Letter v, Letter w);
BetaElement b_tha(const BetaElement& a, Letter u, Letter x);
BetaElement b_t_sigma(const BetaElement& a, Letter u, Letter v);
BetaElement b_h_sigma(const BetaElement& a, Letter x, Letter y);
/// Deletes row u and sets t_u = 1.
BetaElement b_t_eta(const BetaElement& a, Letter u);
BetaElement b_h_eta(const BetaElement& a, Letter x);
BetaElement b_dm(const BetaElement& e, Letter a, Letter b, Letter c);

/// Equal matrices, and omegas equal up to a factor +-prod t^k.
bool unit_equiv(const BetaElement& a, const BetaElement& b);
/// r = +- a monomial.
bool is_unit_monomial(const RatFun& r);

/// "t_" + label.
std::string variable_name(Letter u);

}  // namespace kbh
