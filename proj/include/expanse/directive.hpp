/* directive.hpp -- preperiodic sequences of substitutions and their structure */

#ifndef EXPANSE_DIRECTIVE_HPP
#define EXPANSE_DIRECTIVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "expanse/substitution.hpp"

namespace expanse {

// A preperiodic directive sequence (tau_t)_t of substitutions: a finite
// transient followed by a cycle repeated forever.  Level t maps the level-
// (t+1) alphabet into words over the level-t alphabet, so consecutive levels
// chain: domain(tau_t) == codomain(tau_{t+1}).  The constructor re-indexes
// alphabets by letter name so that independently parsed levels chain, and
// rejects sequences whose letter sets do not match.
class DirectiveSequence {
 public:
  DirectiveSequence(std::vector<Substitution> transient, std::vector<Substitution> cycle);

  // The constant sequence tau, tau, tau, ...  Requires domain == codomain.
  static DirectiveSequence constant(const Substitution& tau);

  int transient_size() const { return static_cast<int>(transient_.size()); }
  int cycle_size() const { return static_cast<int>(cycle_.size()); }
  const std::vector<Substitution>& transient() const { return transient_; }
  const std::vector<Substitution>& cycle() const { return cycle_; }

  // tau_t for any level t >= 0.
  const Substitution& at(int t) const;

  // The level-t alphabet (codomain of tau_t; the shift alphabet at t == 0).
  const AlphabetRef& alphabet(int t) const;

  // Composition tau_t . tau_{t+1} . ... . tau_{t'-1}; the empty block is the
  // identity on the level-t alphabet.
  Substitution block(int t_from, int t_to) const;

  // Shortest / longest image length of the block tau_{[0,t)}, computed on
  // abelianized length vectors with saturating arithmetic (the block itself
  // is never materialized).
  uint64_t block_min_len(int t) const;
  uint64_t block_max_len(int t) const;

  // Smallest alphabet size along the cycle.
  int rank() const;

  // min image length of tau_{[0,t)} tends to infinity.  Decided exactly on
  // the functional digraph of length-one-image letters of the cycle
  // composition: growth fails precisely when that digraph has a cycle.
  bool is_everywhere_growing() const;

  // Every level has min image length >= 2.
  bool is_expanding_levels() const;

  // Regroups levels into consecutive blocks, each with min image length >= 2,
  // returning an equivalent preperiodic sequence of block compositions.
  // Requires is_everywhere_growing().
  DirectiveSequence telescope_expanding() const;

  // For every t some later t' makes every level-t letter occur in the image
  // of every level-t' letter under the composed block.  Decided on boolean
  // incidence-matrix products with a preperiodicity cap.
  bool is_weakly_primitive() const;

  // The sequence seen from level t (drop the first t levels, rotate the
  // cycle).
  DirectiveSequence shifted(int t) const;

  bool operator==(const DirectiveSequence& other) const;

 private:
  std::vector<Substitution> transient_;
  std::vector<Substitution> cycle_;
};

// Text form: an optional "[transient]" section followed by a "[cycle]"
// section; substitutions inside a section are separated by lines containing
// only "---"; '#' starts a comment.  print then parse reproduces the
// sequence.
DirectiveSequence parse_directive(std::string_view text);
std::string print_directive(const DirectiveSequence& seq);

}  // namespace expanse

#endif  // EXPANSE_DIRECTIVE_HPP
