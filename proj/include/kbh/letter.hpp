#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kbh {

/// A label, interned process-wide. Letters compare by the lexicographic order
/// of their names, never by interning order, so canonical forms are stable
/// across runs.
class Letter {
 public:
  constexpr Letter() = default;

  /// Interns a user label. Names must be nonempty and may not start with the
  /// reserved temporary prefix '~'.
  static Letter of(std::string_view name);

  /// The namespaced temporary companion of this letter ("u-bar"). Never
  /// collides with a user label.
  Letter temporary() const;

  const std::string& name() const;
  std::uint64_t rank() const;
  constexpr char16_t id() const { return id_; }
  static Letter from_id(char16_t id) { return Letter(id); }

  friend constexpr bool operator==(Letter a, Letter b) { return a.id_ == b.id_; }
  friend bool operator<(Letter a, Letter b) { return a.id_ != b.id_ && a.rank() < b.rank(); }

 private:
  constexpr explicit Letter(char16_t id) : id_(id) {}
  char16_t id_ = 0;
};

/// Words are strings of letter ids; length is the grading degree.
using Word = std::u16string;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<Word>{}(w); }
};

inline Letter letter_at(const Word& w, std::size_t i) { return Letter::from_id(w[i]); }
inline Word word_of(Letter l) { return Word(1, l.id()); }
Word word_of(std::initializer_list<Letter> letters);
/// Builds a word from single-character or space-separated label text: "uuv" or "1 16 3".
Word parse_word(std::string_view text);

/// Lexicographic order on words under the letter order (a proper prefix is smaller).
bool word_less(const Word& a, const Word& b);
struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};
/// Length first, then lexicographic.
bool word_shortlex_less(const Word& a, const Word& b);

/// Strictly smaller than every proper rotation.
bool is_lyndon(const Word& w);
/// Lexicographically minimal rotation.
Word canonical_rotation(const Word& w);
/// Standard factorization w = left·right of a Lyndon word of length >= 2:
/// right is the lexicographically smallest proper suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

bool contains_letter(const Word& w, Letter l);

/// Plain juxtaposition ("uuv") when every letter name is one character,
/// otherwise names joined by '.' ("1.16.3").
std::string render_word(const Word& w);
std::vector<std::string> word_names(const Word& w);

}  // namespace kbh

template <>
struct std::hash<kbh::Letter> {
  std::size_t operator()(kbh::Letter l) const noexcept { return l.id(); }
};
