/* predecessors.hpp -- counting left extensions of right windows in a language */

#ifndef EXPANSE_PREDECESSORS_HPP
#define EXPANSE_PREDECESSORS_HPP

#include <cstdint>
#include <vector>

#include "expanse/directive.hpp"
#include "expanse/language.hpp"
#include "expanse/parallel.hpp"

namespace expanse {

// For every word w of length right_len in the language, the number of words
// u of length ell with uw in the language.  Right windows approximate right-
// infinite tails from above: counts can only drop as right_len grows, so a
// bound observed here is a bound for every longer window.
struct PredecessorTable {
  int ell = 0;
  int right_len = 0;
  std::vector<std::pair<Word, int>> counts;  // sorted by right word
  int max_count = 0;
  Word argmax;  // lexicographically least right word attaining max_count
};
PredecessorTable predecessor_table(const LanguageSource& lang, int ell, int right_len,
                                   const ExecPolicy& policy = {});

// max_by_ell[l-1] = max over right words of the length-l predecessor count,
// for l = 1..ell_max at fixed right window length.
struct DegreeProfile {
  int right_len = 0;
  std::vector<int> max_by_ell;
  bool constant_tail = false;  // the top half of the sweep is constant
};
DegreeProfile degree_profile(const LanguageSource& lang, int ell_max, int right_len,
                             const ExecPolicy& policy = {});

// Checks whether the max count at right_len survives doubling the right
// window: a witness whose count is an artifact of a short window disappears.
struct PersistenceReport {
  int ell = 0;
  int count = 0;
  bool persists = false;
  Word witness;  // argmax right word at the doubled window length
};
PersistenceReport persistent_witness(const LanguageSource& lang, int ell, int right_len,
                                     const ExecPolicy& policy = {});

// Numeric check of the two standing predecessor bounds for a level-t block
// with right-radius R:
//   letters bound: sum_{j'=ceil(R minlen/maxlen)}^{R} |A_t|^{j'+ell}
//   rank bound:    sum_{j'=ceil(R minlen/maxlen)}^{R} rank^{j'+1}
// observed is the enumerated max count of length-h predecessors at the given
// right window, where h = min |tau_[0,t)(u)| over level-t words u of length
// ell.  Saturating arithmetic; ok flags compare observed against each bound.
struct PredecessorBoundCheck {
  int t = 0, ell = 0, radius = 0, h = 0;
  uint64_t observed = 0;
  uint64_t bound_letters = 0;
  uint64_t bound_rank = 0;
  bool ok_letters = false;
  bool ok_rank = false;
};
PredecessorBoundCheck verify_predecessor_bounds(const DirectiveSequence& seq, int t, int ell,
                                                int radius, int right_len, int budget = 64,
                                                const ExecPolicy& policy = {});

}  // namespace expanse

#endif  // EXPANSE_PREDECESSORS_HPP
