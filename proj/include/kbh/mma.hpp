#pragma once

#include "kbh/cyclic.hpp"

#include <map>
#include <set>

namespace kbh {

/// (lambda; omega) in FL(T)^H x CW^r(T), all truncated at one degree D.
class MMAElement {
 public:
  explicit MMAElement(int degree = 0) : omega_(degree), degree_(degree) {}
  /// Validates: every series is over the tails, has degree D, and omega has no degree-1 wheels.
  MMAElement(int degree, std::set<Letter> tails, std::map<Letter, LieSeries> lambda, CyclicSeries omega);

  static MMAElement unit_t(Letter u, int degree);
  static MMAElement unit_h(Letter x, int degree);
  /// zeta(rho^{+-}_{ux}) = ({u}; x -> +-u; 0)
  static MMAElement generator(int sign, Letter u, Letter x, int degree);

  int degree() const { return degree_; }
  const std::set<Letter>& tails() const { return tails_; }
  const std::map<Letter, LieSeries>& lambda() const { return lambda_; }
  const LieSeries& lambda(Letter x) const;
  const CyclicSeries& omega() const { return omega_; }
  bool has_tail(Letter u) const { return tails_.count(u) != 0; }
  bool has_head(Letter x) const { return lambda_.count(x) != 0; }

  friend bool operator==(const MMAElement& a, const MMAElement& b) {
    return a.degree_ == b.degree_ && a.tails_ == b.tails_ && a.lambda_ == b.lambda_ && a.omega_ == b.omega_;
  }

 private:
  friend MMAElement merge(const MMAElement&, const MMAElement&);
  friend MMAElement hm(const MMAElement&, Letter, Letter, Letter);
  friend MMAElement tm(const MMAElement&, Letter, Letter, Letter);
  friend MMAElement tha(const MMAElement&, Letter, Letter);
  friend MMAElement t_sigma(const MMAElement&, Letter, Letter);
  friend MMAElement h_sigma(const MMAElement&, Letter, Letter);
  friend MMAElement t_eta(const MMAElement&, Letter);
  friend MMAElement h_eta(const MMAElement&, Letter);

  std::set<Letter> tails_;
  std::map<Letter, LieSeries> lambda_;
  CyclicSeries omega_;
  int degree_;
};

/// Disjoint union; omega adds.
MMAElement merge(const MMAElement& a, const MMAElement& b);
/// Heads x,y replaced by z -> bch(lambda_x, lambda_y).
MMAElement hm(const MMAElement& a, Letter x, Letter y, Letter z);
/// Tails u,v merged into w in every lambda and in omega.
MMAElement tm(const MMAElement& a, Letter u, Letter v, Letter w);
/// (lambda; omega + J_u(lambda_x)) followed by RC_u^{lambda_x} everywhere, modulo degree-1 wheels.
MMAElement tha(const MMAElement& a, Letter u, Letter x);
MMAElement t_sigma(const MMAElement& a, Letter u, Letter v);
MMAElement h_sigma(const MMAElement& a, Letter x, Letter y);
MMAElement t_eta(const MMAElement& a, Letter u);
MMAElement h_eta(const MMAElement& a, Letter x);
/// tha^{ab} then tm^{ab}_c then hm^{ab}_c: concatenates strand a with strand b.
MMAElement dm(const MMAElement& e, Letter a, Letter b, Letter c);

}  // namespace kbh
