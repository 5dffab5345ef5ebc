/* substitution.cpp -- free-monoid morphisms between alphabets and their predicates */

#include "expanse/substitution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "expanse/errors.hpp"

namespace expanse {

Substitution::Substitution(AlphabetRef domain, AlphabetRef codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!domain_ || !codomain_) throw std::invalid_argument("substitution requires alphabets");
  if (static_cast<int>(images_.size()) != domain_->size())
    throw std::invalid_argument("substitution needs one image per domain letter");
  min_len_ = images_.front().size();
  max_len_ = 0;
  for (const Word& w : images_) {
    if (w.empty()) throw premise_error("non_erasing", "substitution image is empty");
    for (int32_t l : w.letters())
      if (l < 0 || l >= codomain_->size())
        throw std::invalid_argument("image letter outside codomain");
    min_len_ = std::min(min_len_, w.size());
    max_len_ = std::max(max_len_, w.size());
  }
}

bool Substitution::is_injective() const {
  std::set<Word> distinct(images_.begin(), images_.end());
  return static_cast<int>(distinct.size()) == domain_->size();
}

bool Substitution::is_uniform() const { return min_len_ == max_len_; }

bool Substitution::is_expanding() const { return min_len_ >= 2; }

bool Substitution::is_left_proper() const {
  for (const Word& w : images_)
    if (w[0] != images_.front()[0]) return false;
  return true;
}

bool Substitution::is_right_marked() const {
  std::set<int32_t> lasts;
  for (const Word& w : images_) lasts.insert(w[w.size() - 1]);
  return static_cast<int>(lasts.size()) == domain_->size();
}

Word Substitution::expand(const Word& u) const {
  if (u.alphabet() && !(*u.alphabet() == *domain_))
    throw std::invalid_argument("expand: word alphabet differs from domain");
  Word out(codomain_);
  for (int32_t l : u.letters()) out.append(images_.at(static_cast<size_t>(l)));
  return out;
}

Substitution Substitution::identity(const AlphabetRef& alphabet) {
  std::vector<Word> images;
  for (int i = 0; i < alphabet->size(); ++i)
    images.emplace_back(alphabet, std::vector<int32_t>{i});
  return Substitution(alphabet, alphabet, std::move(images));
}

bool Substitution::operator==(const Substitution& other) const {
  return *domain_ == *other.domain_ && *codomain_ == *other.codomain_ &&
         images_ == other.images_;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (!(*outer.domain() == *inner.codomain()))
    throw std::invalid_argument("compose: domain(outer) must equal codomain(inner)");
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(inner.domain()->size()));
  for (const Word& w : inner.images()) images.push_back(outer.expand(w));
  return Substitution(inner.domain(), outer.codomain(), std::move(images));
}

bool is_q_right_recoverable(const Substitution& tau, int q) {
  if (q < 1 || q >= tau.min_len())
    throw std::out_of_range("q must lie in [1, min_len)");
  if (!tau.is_injective()) return false;
  // Family of image suffixes with the first q letters dropped, one member
  // per letter; a repeat defeats recovery even before the suffix-code test.
  std::vector<Word> truncated;
  std::set<Word> distinct;
  for (const Word& w : tau.images()) {
    Word t = w.suffix(w.size() - q);
    if (!distinct.insert(t).second) return false;
    truncated.push_back(std::move(t));
  }
  return is_suffix_code(truncated);
}

std::optional<int> max_right_recoverability(const Substitution& tau) {
  for (int q = tau.min_len() - 1; q >= 1; --q)
    if (is_q_right_recoverable(tau, q)) return q;
  return std::nullopt;
}

Word maximal_common_prefix(const Substitution& tau) {
  if (!tau.is_left_proper())
    throw premise_error("left_proper", "maximal_common_prefix needs a left-proper substitution");
  int len = tau.min_len();
  for (const Word& w : tau.images())
    for (int i = 0; i < len; ++i)
      if (w[i] != tau.images().front()[i]) {
        len = i;
        break;
      }
  return tau.images().front().prefix(len);
}

bool is_return_substitution(const Substitution& tau, const Word& w) {
  if (w.empty()) throw std::invalid_argument("return word must be non-empty");
  if (w.alphabet() && !(*w.alphabet() == *tau.codomain()))
    throw std::invalid_argument("return word must live over the codomain");
  if (!tau.is_injective()) return false;
  for (const Word& img : tau.images()) {
    Word extended = img + w;
    std::vector<int> occ = occurrences(w, extended);
    if (occ.size() != 2) return false;
    if (occ.front() != 0) return false;                         // prefix occurrence
    if (occ.back() != extended.size() - w.size()) return false;  // suffix occurrence
  }
  return true;
}

bool is_toeplitz(const Substitution& tau) {
  return tau.is_left_proper() && tau.is_uniform() && tau.is_injective() && tau.is_expanding();
}

std::vector<std::vector<bool>> incidence(const Substitution& tau) {
  std::vector<std::vector<bool>> occurs(
      static_cast<size_t>(tau.codomain()->size()),
      std::vector<bool>(static_cast<size_t>(tau.domain()->size()), false));
  for (int a = 0; a < tau.domain()->size(); ++a)
    for (int32_t b : tau.image(a).letters())
      occurs[static_cast<size_t>(b)][static_cast<size_t>(a)] = true;
  return occurs;
}

Substitution rebind(const Substitution& tau, const AlphabetRef& domain,
                    const AlphabetRef& codomain) {
  if (domain->size() != tau.domain()->size() || codomain->size() != tau.codomain()->size())
    throw std::invalid_argument("rebind: alphabet sizes differ");
  std::vector<int32_t> code_map(static_cast<size_t>(tau.codomain()->size()));
  for (int i = 0; i < tau.codomain()->size(); ++i) {
    auto idx = codomain->index(tau.codomain()->letter(i));
    if (!idx) throw std::invalid_argument("rebind: codomain letter sets differ");
    code_map[static_cast<size_t>(i)] = *idx;
  }
  std::vector<Word> images(static_cast<size_t>(domain->size()), Word(codomain));
  for (int a = 0; a < domain->size(); ++a) {
    auto old = tau.domain()->index(domain->letter(a));
    if (!old) throw std::invalid_argument("rebind: domain letter sets differ");
    std::vector<int32_t> letters;
    letters.reserve(static_cast<size_t>(tau.image(*old).size()));
    for (int32_t l : tau.image(*old).letters()) letters.push_back(code_map[static_cast<size_t>(l)]);
    images[static_cast<size_t>(a)] = Word(codomain, std::move(letters));
  }
  return Substitution(domain, codomain, std::move(images));
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (size_t hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokenize_word(const std::string& text, bool multichar) {
  std::vector<std::string> tokens;
  if (multichar) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t dot = text.find('.', pos);
      tokens.push_back(dot == std::string::npos ? text.substr(pos) : text.substr(pos, dot - pos));
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  return tokens;
}

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::vector<std::string> lhs;
  std::vector<std::string> raw_rhs;
  std::istringstream in{std::string(text)};
  std::string line;
  bool multichar = false;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty()) continue;
    size_t arrow = s.find("->");
    if (arrow == std::string::npos)
      throw std::invalid_argument("substitution line missing '->': " + s);
    std::string left = strip(s.substr(0, arrow));
    std::string right = strip(s.substr(arrow + 2));
    if (left.empty() || right.empty())
      throw std::invalid_argument("substitution line needs a letter and an image: " + s);
    if (left.find_first_of(" \t") != std::string::npos)
      throw std::invalid_argument("substitution left-hand side must be one letter: " + s);
    if (left.size() > 1 || right.find('.') != std::string::npos) multichar = true;
    lhs.push_back(left);
    raw_rhs.push_back(right);
  }
  if (lhs.empty()) throw std::invalid_argument("substitution file has no rules");
  std::vector<std::vector<std::string>> rhs;
  rhs.reserve(raw_rhs.size());
  for (const std::string& r : raw_rhs) rhs.push_back(tokenize_word(r, multichar));

  AlphabetRef domain = Alphabet::make(lhs);
  std::vector<std::string> right_letters;
  std::set<std::string> seen;
  bool all_in_domain = true;
  for (const auto& image : rhs)
    for (const std::string& tok : image) {
      if (seen.insert(tok).second) right_letters.push_back(tok);
      if (!domain->index(tok)) all_in_domain = false;
    }
  AlphabetRef codomain = all_in_domain ? domain : Alphabet::make(right_letters);

  std::vector<Word> images;
  for (const auto& image : rhs) {
    Word w(codomain);
    for (const std::string& tok : image) {
      auto idx = codomain->index(tok);
      if (!idx) throw std::invalid_argument("image letter missing from codomain: " + tok);
      w.push_back(*idx);
    }
    images.push_back(std::move(w));
  }
  return Substitution(domain, codomain, std::move(images));
}

std::string print_substitution(const Substitution& tau) {
  std::string out;
  for (int a = 0; a < tau.domain()->size(); ++a) {
    out += tau.domain()->letter(a);
    out += " -> ";
    out += tau.image(a).str();
    out += '\n';
  }
  return out;
}

}  // namespace expanse
