/* language.hpp -- finite-window languages of substitution limit sets */

#ifndef EXPANSE_LANGUAGE_HPP
#define EXPANSE_LANGUAGE_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "expanse/directive.hpp"

namespace expanse {

// A source of factor languages: for each window length r it yields the set of
// words of that length occurring in some fixed shift space.  Computations are
// memoized; lengths past the budget raise budget_error.
class LanguageSource {
 public:
  LanguageSource(std::string name, AlphabetRef alphabet, int budget,
                 std::function<std::set<Word>(int)> compute);

  const std::string& name() const { return name_; }
  const AlphabetRef& alphabet() const { return alphabet_; }
  int budget() const { return budget_; }

  const std::set<Word>& words(int r) const;
  bool contains(const Word& w) const;

 private:
  std::string name_;
  AlphabetRef alphabet_;
  int budget_;
  std::function<std::set<Word>(int)> compute_;
  mutable std::map<int, std::set<Word>> cache_;
};

// The language of the limit set of a directive sequence.  Window length r is
// read off at the first level t whose block has min image length >= r, over
// the pairs of adjacent level-t letters realizable at arbitrarily deep
// levels; that pair set is the greatest fixpoint of the one-cycle pair
// transfer map and makes the result independent of the level used.
// Requires is_everywhere_growing().
LanguageSource directive_language(const DirectiveSequence& seq, int budget = 64);

// Language of the full shift over an alphabet (synthetic comparison source).
LanguageSource full_shift_language(const AlphabetRef& alphabet, int budget = 64);

// Language of the periodic orbit of the word u repeated forever.
LanguageSource periodic_orbit_language(const Word& u, int budget = 64);

// Adjacent-letter pairs of the level-t component of the limit set (exposed
// for level-stability tests); pairs are letter-index pairs over alphabet(t).
std::set<std::pair<int32_t, int32_t>> realizable_pairs(const DirectiveSequence& seq, int t);

// Factor language of the limit set read off at a forced level (must have
// block min length >= r); exposed so tests can assert level independence.
std::set<Word> directive_language_at_level(const DirectiveSequence& seq, int r, int t);

// p(r) for r = 1..r_max.
std::vector<uint64_t> complexity(const LanguageSource& lang, int r_max);

// Entropy estimate from a complexity table (natural logarithm):
//   tail_estimate = ln p(r_max) / r_max,
//   slope         = least-squares slope of the running estimates
//                   ln p(r) / r over the top half of the range.
// A settled estimate has slope near zero; growing complexity keeps the tail
// positive.
struct EntropyEstimate {
  double tail_estimate = 0.0;
  double slope = 0.0;
};
EntropyEstimate entropy_estimate(const std::vector<uint64_t>& complexity_table);

// Evidence that the limit set clusters around a periodic configuration: a
// letter pair (a, b) whose pattern a^m b^m (or a^m b a^m) lies in the
// language for every m up to m_max.  Such families force unboundedly many
// predecessors for the all-a tail, so they refute finite positive
// expansiveness; the check is evidence up to m_max, not a proof.
struct AsymptoticWitness {
  std::string pattern;  // "a^m b^m" or "a^m b a^m"
  int a = 0, b = 0;     // letter indices at level 0
  int m_max = 0;
  Word example;         // the m_max instance
};
std::optional<AsymptoticWitness> asymptotic_periodic_witness(const LanguageSource& lang,
                                                             int m_max = 16);

}  // namespace expanse

#endif  // EXPANSE_LANGUAGE_HPP
