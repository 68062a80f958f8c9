#include "kbh/random.hpp"

namespace kbh::random {

Q small_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  int p = 0;
  while (p == 0) p = num(rng);
  Q q(p, den(rng));
  q.canonicalize();
  return q;
}

LieSeries random_lie(Rng& rng, const std::vector<Letter>& alphabet, int D, int per_degree) {
  LieSeries a(D);
  for (int d = 1; d <= D; ++d) {
    auto here = lyndon_words(alphabet, d);
    std::erase_if(here, [d](const Word& w) { return static_cast<int>(w.size()) != d; });
    if (here.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, here.size() - 1);
    for (int k = 0; k < per_degree; ++k) a.add_term(here[pick(rng)], small_rational(rng));
  }
  return a;
}

CyclicSeries random_wheels(Rng& rng, const std::vector<Letter>& alphabet, int D, int per_degree) {
  CyclicSeries w(D);
  if (alphabet.empty()) return w;
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int d = 2; d <= D; ++d)
    for (int k = 0; k < per_degree; ++k) {
      Word word;
      for (int i = 0; i < d; ++i) word.push_back(alphabet[pick(rng)].id());
      w.add_term(word, small_rational(rng));
    }
  return w;
}

MMAElement random_mma(Rng& rng, const std::vector<Letter>& tails, const std::vector<Letter>& heads, int D) {
  std::map<Letter, LieSeries> lambda;
  for (Letter x : heads) lambda.emplace(x, random_lie(rng, tails, D, 1));
  return MMAElement(D, std::set<Letter>(tails.begin(), tails.end()), std::move(lambda), random_wheels(rng, tails, D, 1));
}

RatFun random_entry(Rng& rng, const std::vector<Letter>& tails) {
  std::uniform_int_distribution<int> coeff(-2, 2), expo(-1, 1), count(1, 2);
  Poly p;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    for (Letter u : tails) m = m * Monomial::var(u, expo(rng));
    p += Poly::monomial(m, Z(coeff(rng)));
  }
  p -= Poly(p.at_one());
  return RatFun(p);
}

BetaElement random_beta(Rng& rng, const std::vector<Letter>& tails, const std::vector<Letter>& heads) {
  std::map<Letter, BetaElement::Row> rows;
  for (Letter u : tails)
    for (Letter x : heads) rows[u][x] = random_entry(rng, tails);
  return BetaElement(std::set<Letter>(tails.begin(), tails.end()), std::set<Letter>(heads.begin(), heads.end()),
                     RatFun(1) + random_entry(rng, tails), std::move(rows));
}

}  // namespace kbh::random
