#include "kbh/letter.hpp"

#include "kbh/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace kbh {
namespace {

constexpr std::size_t kMaxLetters = 1u << 16;

// Ranks are assigned by order maintenance: a new name gets the midpoint of its
// neighbours' ranks, so existing ranks never move and readers need no lock.
class Alphabet {
 public:
  static Alphabet& instance() {
    static Alphabet a;
    return a;
  }

  char16_t intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = by_name_.find(std::string(name));
    if (it != by_name_.end()) return it->second;
    if (names_.size() + 1 >= kMaxLetters) throw DomainError("alphabet exhausted");
    auto next = by_name_.lower_bound(std::string(name));
    std::uint64_t hi = next == by_name_.end() ? std::numeric_limits<std::uint64_t>::max()
                                              : ranks_[next->second].load(std::memory_order_relaxed);
    std::uint64_t lo = next == by_name_.begin() ? 0 : ranks_[std::prev(next)->second].load(std::memory_order_relaxed);
    if (hi - lo < 2) throw DomainError("letter order space exhausted near '" + std::string(name) + "'");
    auto id = static_cast<char16_t>(names_.size() + 1);  // id 0 is reserved
    names_.emplace_back(name);
    ranks_[id].store(lo + (hi - lo) / 2, std::memory_order_release);
    by_name_.emplace(std::string(name), id);
    return id;
  }

  const std::string& name(char16_t id) {
    std::lock_guard lock(mutex_);
    if (id == 0 || id > names_.size()) throw DomainError("unknown letter id");
    return names_[id - 1];
  }

  std::uint64_t rank(char16_t id) const { return ranks_[id].load(std::memory_order_acquire); }

 private:
  Alphabet() : ranks_(new std::atomic<std::uint64_t>[kMaxLetters]) {}
  std::mutex mutex_;
  std::map<std::string, char16_t> by_name_;
  std::deque<std::string> names_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> ranks_;
};

}  // namespace

Letter Letter::of(std::string_view name) {
  if (name.empty()) throw DomainError("empty label");
  if (name.front() == '~') throw DomainError("label '" + std::string(name) + "' uses the reserved prefix '~'");
  return Letter(Alphabet::instance().intern(name));
}

Letter Letter::temporary() const { return Letter(Alphabet::instance().intern("~" + name())); }

const std::string& Letter::name() const { return Alphabet::instance().name(id_); }

std::uint64_t Letter::rank() const { return Alphabet::instance().rank(id_); }

Word word_of(std::initializer_list<Letter> letters) {
  Word w;
  for (Letter l : letters) w.push_back(l.id());
  return w;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.find(' ') != std::string_view::npos || text.find('.') != std::string_view::npos) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '.')) ++i;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '.') ++j;
      if (j > i) w.push_back(Letter::of(text.substr(i, j - i)).id());
      i = j;
    }
  } else {
    for (char c : text) w.push_back(Letter::of(std::string_view(&c, 1)).id());
  }
  return w;
}

bool word_less(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return Letter::from_id(a[i]).rank() < Letter::from_id(b[i]).rank();
  }
  return a.size() < b.size();
}

bool word_shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return word_less(a, b);
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word rot = w.substr(k) + w.substr(0, k);
    if (!word_less(w, rot)) return false;
  }
  return true;
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word rot = w.substr(k) + w.substr(0, k);
    if (word_less(rot, best)) best = std::move(rot);
  }
  return best;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw DomainError("standard factorization needs a word of length >= 2");
  std::size_t best = 1;
  for (std::size_t k = 2; k < w.size(); ++k) {
    if (word_less(w.substr(k), w.substr(best))) best = k;
  }
  return {w.substr(0, best), w.substr(best)};
}

bool contains_letter(const Word& w, Letter l) { return w.find(l.id()) != Word::npos; }

std::vector<std::string> word_names(const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (char16_t c : w) out.push_back(Letter::from_id(c).name());
  return out;
}

std::string render_word(const Word& w) {
  auto names = word_names(w);
  bool single = std::all_of(names.begin(), names.end(), [](const std::string& s) {
    return s.size() == 1 && std::isalpha(static_cast<unsigned char>(s[0]));
  });
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!single && i > 0) out += '.';
    out += names[i];
  }
  return out;
}

}  // namespace kbh
