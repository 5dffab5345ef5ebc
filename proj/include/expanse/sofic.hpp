/* sofic.hpp -- labeled-graph shift presentations and survivor-set analysis */

#ifndef EXPANSE_SOFIC_HPP
#define EXPANSE_SOFIC_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "expanse/language.hpp"
#include "expanse/words.hpp"

namespace expanse {

// A labeled directed graph presenting a sofic shift: the shift's points are
// the label sequences of bi-infinite walks.  Construction trims the graph to
// its essential part (vertices on bi-infinite walks); names of removed
// vertices are recorded.  An empty essential part is allowed and presents the
// empty shift.
class SoficPresentation {
 public:
  struct Edge {
    int src;
    int32_t label;
    int dst;
    auto operator<=>(const Edge&) const = default;
  };

  SoficPresentation(std::vector<std::string> vertices, AlphabetRef alphabet,
                    std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& trimmed_away() const { return trimmed_away_; }

  // True when no vertex has two outgoing edges with one label.
  bool is_deterministic() const;

 private:
  std::vector<std::string> vertices_;
  AlphabetRef alphabet_;
  std::vector<Edge> edges_;
  std::vector<std::string> trimmed_away_;
};

// Text form, one edge per line: "<src> <label> <dst>"; '#' starts a comment.
// Vertices appear in first-use order; labels form the alphabet in
// first-use order unless they are single characters, which are sorted.
SoficPresentation parse_graph(std::string_view text);
std::string print_graph(const SoficPresentation& g);

// Right-resolving presentation of the same shift via the subset construction
// started at the full vertex set, trimmed to its essential part.  Vertex
// names list the constituent subset, e.g. "{p,q}".
SoficPresentation determinize(const SoficPresentation& g);

// De Bruijn-style presentation of the shift over `alphabet` avoiding every
// word in `forbidden` (all of length >= 1); memory is max forbidden length
// minus one.
SoficPresentation sft_from_forbidden(const AlphabetRef& alphabet,
                                     const std::vector<Word>& forbidden);

// The family of survivor sets S(z) = {states from which the right-infinite
// word z is readable}, over all z, computed exactly on the determinized
// presentation: a reachable partial transition map realizes its domain as a
// survivor set precisely when it can run forever without losing domain, i.e.
// reach a cycle among maps with the same domain.  members are vertex-index
// subsets of the determinized graph, which is returned alongside.
struct SurvivorFamily {
  SoficPresentation graph;                     // determinized, trimmed
  std::vector<std::vector<int>> members;       // sorted subsets, sorted
  std::map<std::pair<int, int32_t>, int> step;  // (member, letter) -> member or -1
};
SurvivorFamily predecessor_set_family(const SoficPresentation& g, int state_budget = 1000000);

// True when the presented shift is finite (a disjoint union of single
// cycles once determinized and trimmed).
bool is_finite_shift(const SoficPresentation& g);

// Words of length r readable on the graph (the factor language of the shift).
LanguageSource sofic_language(const SoficPresentation& g, int budget = 64);

// max_by_ell[l-1] = max over survivor sets S of the number of distinct
// length-l label words of paths ending in S; counts cap at `cap` and the
// capped flag is set.  On an essential graph this is the max number of
// length-l predecessors over right-infinite words with survivor set S.
struct SoficProfile {
  std::vector<uint64_t> max_by_ell;
  bool capped = false;
  bool bounded_tail = false;  // top half of the sweep is constant
};
SoficProfile sofic_degree_profile(const SoficPresentation& g, int ell_max,
                                  uint64_t cap = 1000000);

}  // namespace expanse

#endif  // EXPANSE_SOFIC_HPP
