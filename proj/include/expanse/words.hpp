/* words.hpp -- alphabets, finite words, and elementary word predicates */

#ifndef EXPANSE_WORDS_HPP
#define EXPANSE_WORDS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace expanse {

// An ordered finite alphabet.  Letters are arbitrary non-empty tokens without
// whitespace; single-character alphabets serialize words as plain strings,
// multi-character letters are joined with '.'.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& letter(int i) const { return letters_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<int> index(std::string_view letter) const;
  bool multichar() const { return multichar_; }

  bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

 private:
  std::vector<std::string> letters_;
  std::map<std::string, int, std::less<>> index_;
  bool multichar_ = false;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

// A finite word over an alphabet, stored as letter indices.  Comparison is
// lexicographic by index; mixing words over different alphabets in one
// comparison is a caller bug and only the index sequences are compared.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
  Word(AlphabetRef alphabet, std::vector<int32_t> letters);

  // Parses the serialized form: concatenated letters for single-character
  // alphabets, '.'-separated tokens otherwise.  Empty text is the empty word.
  static Word parse(const AlphabetRef& alphabet, std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int32_t operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
  const std::vector<int32_t>& letters() const { return letters_; }
  const AlphabetRef& alphabet() const { return alphabet_; }

  // Subword on positions [from, to).
  Word subword(int from, int to) const;
  Word prefix(int len) const { return subword(0, len); }
  Word suffix(int len) const { return subword(size() - len, size()); }

  void push_back(int32_t letter) { letters_.push_back(letter); }
  void append(const Word& other);
  Word operator+(const Word& other) const;

  std::string str() const;

  bool operator==(const Word& other) const { return letters_ == other.letters_; }
  std::strong_ordering operator<=>(const Word& other) const {
    return letters_ <=> other.letters_;
  }

 private:
  AlphabetRef alphabet_;
  std::vector<int32_t> letters_;
};

// True iff u is a suffix of v (every word is a suffix of itself).
bool is_suffix(const Word& u, const Word& v);

// True iff u is a prefix of v.
bool is_prefix(const Word& u, const Word& v);

// True iff no word of the set is a strict suffix of another.  Duplicates are
// collapsed (set semantics).  The empty word is rejected as a premise error.
bool is_suffix_code(const std::vector<Word>& words);

// Smallest p >= 1 with u[i] == u[i+p] wherever both sides exist.
// Errors on the empty word.
int smallest_period(const Word& u);

// True iff no strict non-empty prefix of w is also a suffix of w, i.e. w has
// no border; such a word cannot overlap itself in a configuration.
bool is_nonoverlapping(const Word& w);

// Starting positions of every (possibly overlapping) occurrence of `pattern`
// in `text`, in increasing order.  Errors on an empty pattern.
std::vector<int> occurrences(const Word& pattern, const Word& text);

// The set of length-r factors of u (empty if r > |u|).  Errors on r < 1.
std::set<Word> factors(const Word& u, int r);

}  // namespace expanse

#endif  // EXPANSE_WORDS_HPP
