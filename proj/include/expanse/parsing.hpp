/* parsing.hpp -- desubstitution schemes over finite windows and probes */

#ifndef EXPANSE_PARSING_HPP
#define EXPANSE_PARSING_HPP

#include <optional>
#include <string>
#include <vector>

#include "expanse/language.hpp"
#include "expanse/parallel.hpp"
#include "expanse/substitution.hpp"

namespace expanse {

// A finite window of a configuration: word positions [0, |word|) are mapped
// to configuration positions [-origin, |word| - origin).
struct Window {
  Word word;
  int origin = 0;

  int lo() const { return -origin; }
  int hi() const { return word.size() - origin; }
  int32_t at(int pos) const { return word[pos + origin]; }
};

// The visible part of a desubstitution of a window under a substitution: cut
// positions (in configuration coordinates) splitting the window into image
// segments, the letters desubstituting the full segments, and the partial
// segments clipped by the window edges.  k0_index points at the last cut <= 0;
// a scheme is standard when that cut is followed by one > 0, which the width
// precondition makes visible.
struct Scheme {
  std::vector<int> cuts;        // increasing, within [lo, hi]
  int k0_index = 0;             // index of k_0 in cuts
  Word letters;                 // letters[i] desubstitutes [cuts[i], cuts[i+1])
  Word left_partial;            // window content before cuts.front() (maybe empty)
  Word right_partial;           // window content after cuts.back() (maybe empty)

  int cut_relative(int j) const { return cuts[static_cast<size_t>(k0_index + j)]; }
  bool operator==(const Scheme& other) const {
    return cuts == other.cuts && left_partial == other.left_partial &&
           right_partial == other.right_partial;
  }
  bool operator<(const Scheme& other) const { return cuts < other.cuts; }
};

// All standard desubstitution schemes of the window, ordered by cut sequence.
// Requires origin >= max_len(tau) and |word| - origin >= max_len(tau) so that
// the standardness cuts are visible; a left partial segment must be a strict
// suffix of some image and a right partial a strict prefix (a full image at
// the edge is represented by an explicit edge cut instead).  Schemes are cut
// sequences: when several letters share an image, the alphabetically first
// desubstituting letter is recorded.  More than max_schemes results raise
// budget_error.
std::vector<Scheme> enumerate_standard_schemes(const Substitution& tau, const Window& window,
                                               int max_schemes = 4096);

// Quasi-recognizability probe: searches all width-2M windows of the language
// (origin M) for one carrying two standard schemes whose cuts differ strictly
// inside the window.  Schemes differing only by a cut at the exact window
// edge describe the same parse (a complete final image versus a partial one
// is decided by content outside the window), so they count once.  Requires
// M >= 2 max_len.  A hit refutes quasi-recognizability outright; no hit is
// evidence up to M.
struct QuasiRecognizabilityReport {
  bool refuted = false;
  int window_half_width = 0;
  std::optional<Window> counterexample;
  std::vector<Scheme> schemes;  // one representative per distinct parse when refuted
};
QuasiRecognizabilityReport probe_quasi_recognizability(const Substitution& tau,
                                                       const LanguageSource& lang, int m,
                                                       const ExecPolicy& policy = {});

// Right-radius probe: searches all pairs of width-2M windows that agree on
// [0, M) for standard schemes that never merge within radius R: schemes merge
// when some cut k_j = k'_{j'} (j, j' <= R) starts identical interior cut tails
// and identical visible content.  Requires M >= (R + 2) max_len.  A pair with
// no merge refutes radius R; none found is evidence up to M.
struct RadiusProbeReport {
  bool refuted = false;
  int radius = 0;
  int window_half_width = 0;
  std::optional<std::pair<Window, Window>> counterexample;
  std::vector<Scheme> schemes;  // the two non-merging schemes when refuted
};
RadiusProbeReport probe_right_radius(const Substitution& tau, const LanguageSource& lang, int r,
                                     int m, const ExecPolicy& policy = {});

// Right-radius arithmetic for composed substitutions: a radius R for the
// outer factor and R_inner for the inner yield ceil(R / min_len_inner) +
// R_inner for the composition.
int radius_compose(int r_outer, int min_len_inner, int r_inner);

// Least m with sum_{i<t} R_i * minlen(tau_[0,i]) <= minlen(tau_[0,t)) * m for
// every t in [1, t_max], given one radius per level; nullopt when the
// required m still grows at t_max.  radii must cover levels 0..t_max-1.
std::optional<int> radius_series_bound(const DirectiveSequence& seq,
                                       const std::vector<int>& radii, int t_max);

}  // namespace expanse

#endif  // EXPANSE_PARSING_HPP
