/* substitution.hpp -- free-monoid morphisms between alphabets and their predicates */

#ifndef EXPANSE_SUBSTITUTION_HPP
#define EXPANSE_SUBSTITUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "expanse/words.hpp"

namespace expanse {

// A substitution maps each letter of its domain alphabet to a non-empty word
// over its codomain alphabet and extends to words by concatenation.  Erasing
// images are rejected at construction; every downstream result assumes
// non-erasing maps.
class Substitution {
 public:
  Substitution(AlphabetRef domain, AlphabetRef codomain, std::vector<Word> images);

  const AlphabetRef& domain() const { return domain_; }
  const AlphabetRef& codomain() const { return codomain_; }
  const Word& image(int letter) const { return images_.at(static_cast<size_t>(letter)); }
  const std::vector<Word>& images() const { return images_; }

  // Shortest and longest image lengths.
  int min_len() const { return min_len_; }
  int max_len() const { return max_len_; }

  bool is_injective() const;     // images pairwise distinct
  bool is_uniform() const;       // all images the same length
  bool is_expanding() const;     // min_len() >= 2
  bool is_left_proper() const;   // all images begin with the same letter
  bool is_right_marked() const;  // last letters pairwise distinct

  // Monoid extension: image of a word over the domain.
  Word expand(const Word& u) const;

  // Identity substitution on an alphabet.
  static Substitution identity(const AlphabetRef& alphabet);

  bool operator==(const Substitution& other) const;

 private:
  AlphabetRef domain_;
  AlphabetRef codomain_;
  std::vector<Word> images_;
  int min_len_ = 0;
  int max_len_ = 0;
};

// Composition outer . inner: first apply inner, then the monoid extension of
// outer.  Requires domain(outer) == codomain(inner) as letter sets.
Substitution compose(const Substitution& outer, const Substitution& inner);

// q-right-recoverability: q in [1, min_len) (anything else is a range error,
// reported distinctly from a plain false), the substitution is injective, and
// the images-with-the-first-q-letters-removed, taken as a family indexed by
// letter, form a suffix code with no repeats.  A repeated truncated image
// counts as a failure even though a set would collapse it: recovery must pin
// down the image from a truncated occurrence, which a repeat prevents.
bool is_q_right_recoverable(const Substitution& tau, int q);

// Largest q in [1, min_len) passing is_q_right_recoverable, if any.
std::optional<int> max_right_recoverability(const Substitution& tau);

// Longest common prefix u of all images of a left-proper substitution.
// Errors if the substitution is not left-proper.
Word maximal_common_prefix(const Substitution& tau);

// tau is a return substitution with respect to w when tau is injective and
// for every letter a the word tau(a)w contains exactly two (possibly
// overlapping) occurrences of w: one as a prefix and one as a suffix.
bool is_return_substitution(const Substitution& tau, const Word& w);

// Toeplitz-type substitution: left-proper, uniform, injective, expanding.
bool is_toeplitz(const Substitution& tau);

// Boolean incidence: occurs[b][a] == true iff codomain letter b occurs in the
// image of domain letter a.
std::vector<std::vector<bool>> incidence(const Substitution& tau);

// Re-indexes a substitution onto the given alphabets by letter name.  The
// letter sets must match exactly; only the index order may differ.  Used to
// chain independently parsed levels into one directive sequence.
Substitution rebind(const Substitution& tau, const AlphabetRef& domain,
                    const AlphabetRef& codomain);

// Text form, one line per domain letter in alphabet order:
//   <letter> -> <word>
// '#' starts a comment; blank lines are ignored.  The domain is the set of
// left-hand letters in file order.  If every right-hand letter also occurs on
// the left, the codomain is the domain; otherwise it is the set of right-hand
// letters in first-appearance order.  print followed by parse reproduces the
// substitution; parse followed by print reproduces the file up to comments
// and whitespace.
Substitution parse_substitution(std::string_view text);
std::string print_substitution(const Substitution& tau);

}  // namespace expanse

#endif  // EXPANSE_SUBSTITUTION_HPP
