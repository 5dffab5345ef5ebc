/* words.cpp -- alphabets, finite words, and elementary word predicates */

#include "expanse/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "expanse/errors.hpp"

namespace expanse {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must be non-empty");
  for (size_t i = 0; i < letters_.size(); ++i) {
    const std::string& l = letters_[i];
    if (l.empty()) throw std::invalid_argument("alphabet letter must be non-empty");
    if (l.find_first_of(" \t\r\n.") != std::string::npos)
      throw std::invalid_argument("alphabet letter contains whitespace or '.': " + l);
    if (!index_.emplace(l, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate alphabet letter: " + l);
    if (l.size() > 1) multichar_ = true;
  }
}

AlphabetRef Alphabet::make(std::vector<std::string> letters) {
  return std::make_shared<const Alphabet>(std::move(letters));
}

std::optional<int> Alphabet::index(std::string_view letter) const {
  auto it = index_.find(letter);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word::Word(AlphabetRef alphabet, std::vector<int32_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw std::invalid_argument("word requires an alphabet");
  for (int32_t l : letters_)
    if (l < 0 || l >= alphabet_->size())
      throw std::invalid_argument("letter index out of range");
}

Word Word::parse(const AlphabetRef& alphabet, std::string_view text) {
  if (!alphabet) throw std::invalid_argument("word requires an alphabet");
  Word w(alphabet);
  if (text.empty()) return w;
  if (alphabet->multichar()) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t dot = text.find('.', pos);
      std::string_view token =
          dot == std::string_view::npos ? text.substr(pos) : text.substr(pos, dot - pos);
      auto idx = alphabet->index(token);
      if (!idx) throw std::invalid_argument("unknown letter: " + std::string(token));
      w.push_back(*idx);
      if (dot == std::string_view::npos) break;
      pos = dot + 1;
    }
  } else {
    for (char c : text) {
      auto idx = alphabet->index(std::string_view(&c, 1));
      if (!idx) throw std::invalid_argument("unknown letter: " + std::string(1, c));
      w.push_back(*idx);
    }
  }
  return w;
}

Word Word::subword(int from, int to) const {
  if (from < 0 || to > size() || from > to)
    throw std::out_of_range("subword range out of bounds");
  return Word(alphabet_, std::vector<int32_t>(letters_.begin() + from, letters_.begin() + to));
}

void Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  if (!alphabet_) alphabet_ = other.alphabet_;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w.append(other);
  return w;
}

std::string Word::str() const {
  if (!alphabet_) return "";
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0 && alphabet_->multichar()) out += '.';
    out += alphabet_->letter(letters_[i]);
  }
  return out;
}

bool is_suffix(const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  return std::equal(u.letters().begin(), u.letters().end(),
                    v.letters().end() - u.size());
}

bool is_prefix(const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  return std::equal(u.letters().begin(), u.letters().end(), v.letters().begin());
}

bool is_suffix_code(const std::vector<Word>& words) {
  std::set<Word> distinct(words.begin(), words.end());
  for (const Word& w : distinct) {
    if (w.empty()) throw premise_error("non_empty_words", "suffix code test on empty word");
    for (const Word& v : distinct)
      if (w.size() < v.size() && is_suffix(w, v)) return false;
  }
  return true;
}

int smallest_period(const Word& u) {
  if (u.empty()) throw std::invalid_argument("smallest_period of empty word");
  for (int p = 1; p < u.size(); ++p) {
    bool ok = true;
    for (int i = 0; i + p < u.size(); ++i)
      if (u[i] != u[i + p]) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  return u.size();
}

bool is_nonoverlapping(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_nonoverlapping of empty word");
  for (int len = 1; len < w.size(); ++len)
    if (is_suffix(w.prefix(len), w)) return false;
  return true;
}

std::vector<int> occurrences(const Word& pattern, const Word& text) {
  if (pattern.empty()) throw std::invalid_argument("occurrences of empty pattern");
  std::vector<int> out;
  for (int i = 0; i + pattern.size() <= text.size(); ++i) {
    bool hit = true;
    for (int j = 0; j < pattern.size(); ++j)
      if (text[i + j] != pattern[j]) {
        hit = false;
        break;
      }
    if (hit) out.push_back(i);
  }
  return out;
}

std::set<Word> factors(const Word& u, int r) {
  if (r < 1) throw std::invalid_argument("factor length must be >= 1");
  std::set<Word> out;
  for (int i = 0; i + r <= u.size(); ++i) out.insert(u.subword(i, i + r));
  return out;
}

}  // namespace expanse
