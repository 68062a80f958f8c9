#include "kbh/serialize.hpp"

#include "kbh/errors.hpp"

namespace kbh {
namespace {

using json = nlohmann::json;

json word_json(const Word& w) { return word_names(w); }

Word word_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a word must be an array of labels");
  Word w;
  for (auto& l : j) {
    if (!l.is_string()) throw ParseError("word labels must be strings");
    w.push_back(Letter::of(l.get<std::string>()).id());
  }
  return w;
}

template <class Terms>
json terms_json(const Terms& t) {
  json out = json::array();
  for (auto& [w, c] : t.sorted()) out.push_back(json::array({format_rational(c), word_json(w)}));
  return out;
}

template <class Add>
void terms_from_json(const json& j, Add add) {
  if (!j.is_array()) throw ParseError("terms must be an array of [coefficient, word]");
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string()) throw ParseError("a term must be [\"p/q\", [labels...]]");
    add(word_from_json(t[1]), parse_rational(t[0].get<std::string>()));
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string label_of(const json& j) {
  if (!j.is_string()) throw ParseError("labels must be strings");
  return j.get<std::string>();
}

std::string ratfun_text(const RatFun& r) { return r.to_string(variable_name); }

RatFun ratfun_from(const json& j) {
  if (!j.is_string()) throw ParseError("rational functions must be strings");
  return parse_ratfun(j.get<std::string>(), variable_letter);
}

template <class Terms, class Name>
std::string render_terms(const Terms& t, int show_degree, Name name) {
  std::string out;
  for (auto& [w, c] : t.sorted()) {
    if (static_cast<int>(w.size()) > show_degree) continue;
    const bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Q mag = abs(c);
    if (mag != 1) out += format_rational(mag) + "*";
    out += name(w);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Letter variable_letter(std::string_view name) {
  if (name.size() < 3 || name.substr(0, 2) != "t_") throw ParseError("unknown variable '" + std::string(name) + "'");
  return Letter::of(std::string(name.substr(2)));
}

json to_json(const MMAElement& e) {
  json tails = json::array();
  for (Letter u : e.tails()) tails.push_back(u.name());
  json lambda = json::object();
  for (auto& [x, l] : e.lambda()) lambda[x.name()] = terms_json(l.terms());
  return {{"degree", e.degree()}, {"tails", tails}, {"lambda", lambda}, {"omega", terms_json(e.omega().terms())}};
}

MMAElement mma_from_json(const json& j) {
  const json& deg = field(j, "degree");
  if (!deg.is_number_integer() || deg.get<int>() < 0) throw ParseError("'degree' must be a non-negative integer");
  const int D = deg.get<int>();
  std::set<Letter> tails;
  for (auto& u : field(j, "tails")) tails.insert(Letter::of(label_of(u)));
  std::map<Letter, LieSeries> lambda;
  const json& lj = field(j, "lambda");
  if (!lj.is_object()) throw ParseError("'lambda' must be an object");
  for (auto& [x, terms] : lj.items()) {
    LieSeries s(D);
    terms_from_json(terms, [&](const Word& w, const Q& c) {
      if (!is_lyndon(w)) throw ParseError("lambda_" + x + ": '" + render_word(w) + "' is not a Lyndon word");
      s.add_term(w, c);
    });
    lambda.emplace(Letter::of(x), std::move(s));
  }
  CyclicSeries omega(D);
  terms_from_json(field(j, "omega"), [&](const Word& w, const Q& c) { omega.add_term(w, c); });
  return MMAElement(D, std::move(tails), std::move(lambda), std::move(omega));
}

json to_json(const BetaElement& e) {
  json tails = json::array(), heads = json::array(), matrix = json::object();
  for (Letter u : e.tails()) tails.push_back(u.name());
  for (Letter x : e.heads()) heads.push_back(x.name());
  for (auto& [u, row] : e.rows()) {
    json r = json::object();
    for (auto& [x, v] : row) r[x.name()] = ratfun_text(v);
    matrix[u.name()] = r;
  }
  return {{"tails", tails}, {"heads", heads}, {"omega", ratfun_text(e.omega())}, {"matrix", matrix}};
}

BetaElement beta_from_json(const json& j) {
  std::set<Letter> tails, heads;
  for (auto& u : field(j, "tails")) tails.insert(Letter::of(label_of(u)));
  for (auto& x : field(j, "heads")) heads.insert(Letter::of(label_of(x)));
  std::map<Letter, BetaElement::Row> rows;
  const json& m = field(j, "matrix");
  if (!m.is_object()) throw ParseError("'matrix' must be an object");
  for (auto& [u, row] : m.items()) {
    if (!row.is_object()) throw ParseError("matrix rows must be objects");
    for (auto& [x, v] : row.items()) rows[Letter::of(u)][Letter::of(x)] = ratfun_from(v);
  }
  return BetaElement(std::move(tails), std::move(heads), ratfun_from(field(j, "omega")), std::move(rows));
}

std::string render(const LieSeries& s, int show_degree) {
  return render_terms(s.terms(), show_degree, [](const Word& w) { return bracket_form(w); });
}

std::string render(const CyclicSeries& w, int show_degree) {
  return render_terms(w.terms(), show_degree, [](const Word& x) { return "tr(" + render_word(x) + ")"; });
}

std::string render(const MMAElement& e, int show_degree, bool wheels_only) {
  std::string out;
  if (!wheels_only)
    for (auto& [x, l] : e.lambda()) out += "lambda[" + x.name() + "] = " + render(l, show_degree) + "\n";
  out += "omega = " + render(e.omega(), show_degree) + "\n";
  return out;
}

std::string render(const BetaElement& e) {
  std::string out = "omega = " + ratfun_text(e.omega()) + "\n";
  for (auto& [u, row] : e.rows())
    for (auto& [x, v] : row) out += "A[" + u.name() + "," + x.name() + "] = " + ratfun_text(v) + "\n";
  return out;
}

}  // namespace kbh
