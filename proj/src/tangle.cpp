#include "kbh/tangle.hpp"

#include "kbh/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace kbh {
namespace {

using json = nlohmann::json;

bool valid_label(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Letter label(std::string_view s, int line, const std::string& where) {
  if (!valid_label(s)) throw ParseError(where + ": bad label '" + std::string(s) + "' (letters, digits and '_' only)", line);
  return Letter::of(std::string(s));
}

std::string crossing_where(std::size_t i) { return "crossing " + std::to_string(i + 1); }
std::string sew_where(std::size_t i) { return "sew step " + std::to_string(i + 1); }

// Strand a becomes c and strand b disappears.
void sew_labels(std::vector<Letter>& alive, const SewStep& s) {
  auto ib = std::find(alive.begin(), alive.end(), s.b) - alive.begin();
  *std::find(alive.begin(), alive.end(), s.a) = s.c;
  alive.erase(alive.begin() + ib);
}

// Every label used once, and the plan only touches live labels.
void validate(const Tangle& t) {
  std::vector<Letter> alive;
  std::set<Letter> seen;
  auto introduce = [&](Letter l, int line, const std::string& where) {
    if (!seen.insert(l).second) throw ParseError(where + ": label '" + l.name() + "' used twice", line);
    alive.push_back(l);
  };
  for (std::size_t i = 0; i < t.crossings.size(); ++i) {
    auto& c = t.crossings[i];
    if (c.over == c.under)
      throw ParseError(crossing_where(i) + ": both strands are '" + c.over.name() + "'; give each end its own label",
                       c.line);
    introduce(c.over, c.line, crossing_where(i));
    introduce(c.under, c.line, crossing_where(i));
  }
  for (Letter s : t.strands) introduce(s, 0, "strand");
  for (std::size_t i = 0; i < t.plan.size(); ++i) {
    auto& s = t.plan[i];
    const auto where = sew_where(i);
    auto pos = [&](Letter l) { return std::find(alive.begin(), alive.end(), l); };
    if (s.a == s.b) throw ParseError(where + ": cannot sew '" + s.a.name() + "' to itself", s.line);
    for (Letter l : {s.a, s.b})
      if (pos(l) == alive.end()) throw ParseError(where + ": label '" + l.name() + "' is not an open strand", s.line);
    if (s.c != s.a && s.c != s.b && !seen.insert(s.c).second)
      throw ParseError(where + ": result label '" + s.c.name() + "' is already in use", s.line);
    sew_labels(alive, s);
  }
  if (t.open) {
    std::set<Letter> want(t.open->begin(), t.open->end()), have(alive.begin(), alive.end());
    if (want.size() != t.open->size()) throw ParseError("open: repeated label");
    if (want != have) {
      std::string got;
      for (Letter l : alive) got += " " + l.name();
      throw ParseError("open: the plan leaves" + (got.empty() ? std::string(" nothing") : got));
    }
  }
}

Tangle parse_text(std::string_view text) {
  Tangle t;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  int open_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& op = tok[0];
    auto need = [&](std::size_t n) {
      if (tok.size() != n + 1)
        throw ParseError("'" + op + "' takes " + std::to_string(n) + " labels, got " + std::to_string(tok.size() - 1),
                         line);
    };
    const std::string where = "'" + op + "'";
    if (op == "X+" || op == "X-" || op == "V") {
      need(2);
      CrossingKind kind = op == "X+" ? CrossingKind::positive : op == "X-" ? CrossingKind::negative : CrossingKind::virtual_;
      t.crossings.push_back({kind, label(tok[1], line, where), label(tok[2], line, where), line});
    } else if (op == "strand") {
      need(1);
      t.strands.push_back(label(tok[1], line, where));
    } else if (op == "sew") {
      need(3);
      t.plan.push_back({label(tok[1], line, where), label(tok[2], line, where), label(tok[3], line, where), line});
    } else if (op == "open") {
      if (t.open) throw ParseError("second 'open' line", line);
      if (tok.size() < 2) throw ParseError("'open' needs at least one label", line);
      t.open.emplace();
      for (std::size_t i = 1; i < tok.size(); ++i) t.open->push_back(label(tok[i], line, where));
      open_line = line;
    } else {
      throw ParseError("unknown statement '" + op + "'", line);
    }
  }
  try {
    validate(t);
  } catch (const ParseError& e) {
    if (e.line == 0 && open_line > 0 && std::string_view(e.what()).starts_with("open")) throw ParseError(e.what(), open_line);
    throw;
  }
  return t;
}

std::string json_label(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": labels must be strings");
  return j.get<std::string>();
}

Tangle parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n'));
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
  if (!doc.is_object()) throw ParseError("JSON tangle must be an object");
  for (auto& [key, value] : doc.items())
    if (key != "crossings" && key != "plan" && key != "strands" && key != "open")
      throw ParseError("unknown JSON field '" + key + "'");
  Tangle t;
  if (doc.contains("crossings")) {
    if (!doc["crossings"].is_array()) throw ParseError("'crossings' must be an array");
    std::size_t i = 0;
    for (auto& c : doc["crossings"]) {
      const auto where = crossing_where(i++);
      if (!c.is_object() || !c.contains("sign") || !c.contains("over") || !c.contains("under"))
        throw ParseError(where + ": needs \"sign\", \"over\" and \"under\"");
      const std::string sign = json_label(c["sign"], where);
      CrossingKind kind;
      if (sign == "+") {
        kind = CrossingKind::positive;
      } else if (sign == "-") {
        kind = CrossingKind::negative;
      } else if (sign == "v") {
        kind = CrossingKind::virtual_;
      } else {
        throw ParseError(where + ": sign must be \"+\", \"-\" or \"v\"");
      }
      t.crossings.push_back({kind, label(json_label(c["over"], where), 0, where),
                             label(json_label(c["under"], where), 0, where), 0});
    }
  }
  if (doc.contains("strands")) {
    if (!doc["strands"].is_array()) throw ParseError("'strands' must be an array");
    for (auto& s : doc["strands"]) t.strands.push_back(label(json_label(s, "strands"), 0, "strands"));
  }
  if (doc.contains("plan")) {
    if (!doc["plan"].is_array()) throw ParseError("'plan' must be an array");
    std::size_t i = 0;
    for (auto& s : doc["plan"]) {
      const auto where = sew_where(i++);
      if (!s.is_array() || s.size() != 3) throw ParseError(where + ": must be [a, b, c]");
      t.plan.push_back({label(json_label(s[0], where), 0, where), label(json_label(s[1], where), 0, where),
                        label(json_label(s[2], where), 0, where), 0});
    }
  }
  if (doc.contains("open")) {
    if (!doc["open"].is_array() || doc["open"].empty()) throw ParseError("'open' must be a non-empty array");
    t.open.emplace();
    for (auto& s : doc["open"]) t.open->push_back(label(json_label(s, "open"), 0, "open"));
  }
  validate(t);
  return t;
}

template <class E, class Delta, class Unit, class Merge, class Dm>
E evaluate(const Tangle& t, E start, Delta delta, Unit unit, Merge merge_op, Dm dm_op) {
  E e = std::move(start);
  for (auto& c : t.crossings) e = merge_op(e, delta(c));
  for (Letter s : t.strands) e = merge_op(e, unit(s));
  for (auto& s : t.plan) e = dm_op(e, s.a, s.b, s.c);
  return e;
}

}  // namespace

Tangle parse_tangle(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') return parse_json(text);
  return parse_text(text);
}

Tangle load_tangle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tangle(buf.str());
}

std::vector<Letter> final_strands(const Tangle& t) {
  std::vector<Letter> alive;
  for (auto& c : t.crossings) {
    alive.push_back(c.over);
    alive.push_back(c.under);
  }
  for (Letter s : t.strands) alive.push_back(s);
  for (auto& s : t.plan) {
    sew_labels(alive, s);
  }
  return alive;
}

MMAElement delta_crossing(const Crossing& c, int degree) {
  const MMAElement ends = merge(MMAElement::unit_t(c.under, degree), MMAElement::unit_h(c.over, degree));
  if (c.kind == CrossingKind::virtual_)
    return merge(ends, merge(MMAElement::unit_t(c.over, degree), MMAElement::unit_h(c.under, degree)));
  const int sign = c.kind == CrossingKind::positive ? 1 : -1;
  return merge(MMAElement::generator(sign, c.over, c.under, degree), ends);
}

BetaElement beta_crossing(const Crossing& c, std::optional<Letter> variable) {
  const BetaElement ends = b_merge(BetaElement::unit_t(c.under), BetaElement::unit_h(c.over));
  if (c.kind == CrossingKind::virtual_)
    return b_merge(ends, b_merge(BetaElement::unit_t(c.over), BetaElement::unit_h(c.under)));
  const int sign = c.kind == CrossingKind::positive ? 1 : -1;
  return b_merge(BetaElement::generator(sign, c.over, c.under, variable), ends);
}

MMAElement zeta_of_tangle(const Tangle& t, int degree) {
  return evaluate(
      t, MMAElement(degree), [&](const Crossing& c) { return delta_crossing(c, degree); },
      [&](Letter s) { return merge(MMAElement::unit_t(s, degree), MMAElement::unit_h(s, degree)); },
      [](const MMAElement& a, const MMAElement& b) { return merge(a, b); },
      [](const MMAElement& e, Letter a, Letter b, Letter c) { return dm(e, a, b, c); });
}

BetaElement beta_of_tangle_full(const Tangle& t) {
  return evaluate(
      t, BetaElement(), [](const Crossing& c) { return beta_crossing(c); },
      [](Letter s) { return b_merge(BetaElement::unit_t(s), BetaElement::unit_h(s)); },
      [](const BetaElement& a, const BetaElement& b) { return b_merge(a, b); },
      [](const BetaElement& e, Letter a, Letter b, Letter c) { return b_dm(e, a, b, c); });
}

BetaElement beta_of_tangle(const Tangle& t) {
  // labels are never reused, so each one has a unique successor under the plan
  std::map<Letter, Letter> next;
  for (auto& s : t.plan) {
    if (s.a != s.c) next[s.a] = s.c;
    if (s.b != s.c) next[s.b] = s.c;
  }
  auto final_label = [&](Letter l) {
    for (auto it = next.find(l); it != next.end(); it = next.find(l)) l = it->second;
    return l;
  };
  return evaluate(
      t, BetaElement(), [&](const Crossing& c) { return beta_crossing(c, final_label(c.over)); },
      [](Letter s) { return b_merge(BetaElement::unit_t(s), BetaElement::unit_h(s)); },
      [](const BetaElement& a, const BetaElement& b) { return b_merge(a, b); },
      [&](const BetaElement& e, Letter a, Letter b, Letter c) {
        // tm's renaming is the identity on the identified variables
        return b_dm(e, a, b, c);
      });
}

Z LaurentPoly::at(int k) const {
  if (k < low || k > high()) return Z(0);
  return coeffs[static_cast<std::size_t>(k - low)];
}

std::string LaurentPoly::to_string(const std::string& var) const {
  std::string out;
  for (int k = low; k <= high(); ++k) {
    Z c = at(k);
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Z mag = abs(c);
    std::string power = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
    if (power.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power;
    } else {
      out += mag.get_str() + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

LaurentPoly normalize_alexander(const BetaElement& e) {
  if (e.tails().size() != 1 || e.heads().size() != 1)
    throw DomainError("the Alexander polynomial needs a single open strand; this tangle has " +
                      std::to_string(e.tails().size()) + " tails and " + std::to_string(e.heads().size()) + " heads");
  const Letter t = *e.tails().begin();
  const RatFun& w = e.omega();
  auto den = w.den().as_constant();
  if (!den) throw DomainError("omega is not a Laurent polynomial: " + w.to_string(variable_name));
  Poly p = w.num();
  if (*den != 1) {
    if (sgn(p.content() % abs(*den)) != 0) throw DomainError("omega has a non-integral coefficient");
    p = p.divided_by(*den);
  }
  if (p.is_zero()) throw DomainError("omega vanishes");
  std::map<int, Z> c;
  for (auto& [m, z] : p.terms()) c[m.exponent(t)] = z;
  const int lo = c.begin()->first, hi = c.rbegin()->first;
  if ((lo + hi) % 2 != 0) throw DomainError("omega is not symmetric under t <-> 1/t up to a unit");
  const int shift = -(lo + hi) / 2;
  LaurentPoly a;
  a.low = lo + shift;
  a.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Z(0));
  for (auto& [k, z] : c) a.coeffs[static_cast<std::size_t>(k - lo)] = z;
  for (int k = a.low; k <= a.high(); ++k)
    if (a.at(k) != a.at(-k)) throw DomainError("omega is not symmetric under t <-> 1/t up to a unit");
  Z at_one;
  for (auto& z : a.coeffs) at_one += z;
  const bool flip = sgn(at_one) < 0 || (sgn(at_one) == 0 && sgn(a.coeffs.back()) < 0);
  if (flip)
    for (auto& z : a.coeffs) z = -z;
  return a;
}

LaurentPoly alexander(const Tangle& t) { return normalize_alexander(beta_of_tangle(t)); }

std::vector<Q> log_expansion(const RatFun& r, Letter t, int D) {
  for (Letter v : r.variables())
    if (v != t) throw DomainError("log_expansion: unexpected variable t_" + v.name());
  const auto n = static_cast<std::size_t>(D) + 1;
  std::vector<Q> factorial(n, Q(1));
  for (std::size_t k = 1; k < n; ++k) factorial[k] = factorial[k - 1] * Q(static_cast<long>(k));
  // p(e^c) = sum_terms a e^{kc}, coefficient of c^j is sum a k^j / j!
  auto at_exp = [&](const Poly& p) {
    std::vector<Q> s(n);
    for (auto& [m, a] : p.terms()) {
      Q k(m.exponent(t)), power(1);
      for (std::size_t j = 0; j < n; ++j) {
        s[j] += Q(a) * power / factorial[j];
        power *= k;
      }
    }
    return s;
  };
  const auto num = at_exp(r.num()), den = at_exp(r.den());
  if (is_zero(den[0])) throw DomainError("log_expansion: denominator vanishes at t = 1");
  std::vector<Q> g(n);
  for (std::size_t j = 0; j < n; ++j) {
    Q acc = num[j];
    for (std::size_t i = 1; i <= j; ++i) acc -= den[i] * g[j - i];
    g[j] = acc / den[0];
  }
  if (g[0] != 1) throw DomainError("log_expansion: value at t = 1 is not 1");
  // h = log g from h' g = g'
  std::vector<Q> h(n);
  for (std::size_t j = 1; j < n; ++j) {
    Q acc = Q(static_cast<long>(j)) * g[j];
    for (std::size_t k = 1; k < j; ++k) acc -= Q(static_cast<long>(k)) * h[k] * g[j - k];
    h[j] = acc / Q(static_cast<long>(j));
  }
  return h;
}

}  // namespace kbh
