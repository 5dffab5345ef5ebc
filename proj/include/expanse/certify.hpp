/* certify.hpp -- positive-expansiveness certificates for directive sequences */

#ifndef EXPANSE_CERTIFY_HPP
#define EXPANSE_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expanse/directive.hpp"
#include "expanse/parallel.hpp"

namespace expanse {

// One recorded hypothesis check.  conclusive premises were decided exactly;
// the rest carry probe evidence valid up to the recorded budgets.
struct Premise {
  std::string name;
  std::string outcome;   // "holds", "fails", "evidence", "refuted"
  std::string evidence;  // human-readable detail
  bool conclusive = false;
};

// The engine's verdict on a directive sequence's limit set.
//  - verdict "bound": positively n-expansive for the stated bound n; when
//    sharp_above is set the limit set is additionally not positively
//    (sharp_above)-expansive.
//  - verdict "negative": not positively n-expansive for any finite n
//    (up to the witness budget recorded in the premises).
//  - verdict "inconclusive": no rule applied; premises explain why.
struct Certificate {
  std::string verdict;  // "bound" | "negative" | "inconclusive"
  std::optional<uint64_t> bound;
  std::optional<uint64_t> sharp_above;
  std::string rule;
  std::vector<Premise> premises;
  std::vector<std::string> caveats;
  int rank = 0;
  bool weakly_primitive = false;
};

struct CertifyOptions {
  int lang_budget = 64;    // longest language window the engine may request
  int probe_window = 32;   // half-width M for recognizability/radius probes
  int probe_levels = 3;    // how many composed blocks the probes inspect
  int radius_cap = 3;      // largest right radius the probes try
  int m_max = 16;          // asymptotic-periodicity witness depth
  int series_t_max = 24;   // horizon for the radius series bound
  ExecPolicy policy;
};

// Applies the rule ladder: exact screens (finite shift, asymptotic
// periodicity) first, then per-level structure rules ordered by bound
// tightness -- rank for right-marked / return-word / Toeplitz-prefix /
// recoverable-block sequences, rank^2 for suffix-code levels, rank^(R+1) for
// a probed common radius R, and the radius series catch-all -- with
// conclusive recognizability preferred over probe evidence at equal bound.
Certificate certify(const DirectiveSequence& seq, const CertifyOptions& opt = {});

// Certificate for the shift generated by a sequence of Arnoux-Rauzy
// generators over `rank` letters (generator index i maps letter i to itself
// and prepends letter i to every other letter).  The cycle must visit at
// least two distinct indices, which makes the sequence everywhere growing and
// the limit set aperiodic; every generator is a return substitution with
// respect to its own letter, so recognizability is conclusive.
Certificate certify_arnoux_rauzy(int rank, const std::vector<int>& transient_indices,
                                 const std::vector<int>& cycle_indices,
                                 const CertifyOptions& opt = {});

// The Arnoux-Rauzy generator substitution at `index` over `rank` letters
// (alphabet a1..aN), exposed for building directive sequences directly.
Substitution arnoux_rauzy_generator(int rank, int index);

}  // namespace expanse

#endif  // EXPANSE_CERTIFY_HPP
