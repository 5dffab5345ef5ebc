/* parsing.cpp -- desubstitution schemes over finite windows and probes */

#include "expanse/parsing.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "expanse/errors.hpp"

namespace expanse {

namespace {

// True when the window content on [pos, pos + |image|) equals the image.
bool segment_matches(const Window& win, int pos, const Word& image) {
  if (pos < win.lo() || pos + image.size() > win.hi()) return false;
  for (int i = 0; i < image.size(); ++i)
    if (win.at(pos + i) != image[i]) return false;
  return true;
}

// Letters to try per distinct image (alphabetically first representative).
std::vector<int> image_representatives(const Substitution& tau) {
  std::vector<int> reps;
  std::set<Word> seen;
  for (int a = 0; a < tau.domain()->size(); ++a)
    if (seen.insert(tau.image(a)).second) reps.push_back(a);
  return reps;
}

}  // namespace

std::vector<Scheme> enumerate_standard_schemes(const Substitution& tau, const Window& window,
                                               int max_schemes) {
  const int margin = tau.max_len();
  if (window.origin < margin || window.word.size() - window.origin < margin)
    throw std::invalid_argument("window too narrow: need max_len margin on both sides of 0");
  if (window.word.alphabet() && !(*window.word.alphabet() == *tau.codomain()))
    throw std::invalid_argument("window alphabet differs from substitution codomain");

  const int lo = window.lo(), hi = window.hi();
  std::vector<int> reps = image_representatives(tau);
  std::vector<Scheme> out;

  // Left partial candidates: empty (cut at lo) or a strict suffix of some
  // image; record the corresponding first cut.
  std::vector<int> first_cuts{lo};
  for (int len = 1; len < tau.max_len(); ++len) {
    if (lo + len > 0) break;  // the first cut is always <= 0 given the margin
    bool suffix_of_some = false;
    Word part = window.word.prefix(len);
    for (int a : reps)
      if (tau.image(a).size() > len && is_suffix(part, tau.image(a))) {
        suffix_of_some = true;
        break;
      }
    if (suffix_of_some) first_cuts.push_back(lo + len);
  }

  // Depth-first extension of cut sequences.
  struct Frame {
    std::vector<int> cuts;
    std::vector<int32_t> letters;
  };
  for (int first : first_cuts) {
    std::vector<Frame> stack{Frame{{first}, {}}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      int p = f.cuts.back();
      if (p == hi) {
        // Complete tiling, empty right partial.
        Scheme s;
        s.cuts = f.cuts;
        s.letters = Word(tau.domain(), f.letters);
        s.left_partial = window.word.prefix(first - lo);
        s.right_partial = Word(tau.codomain());
        out.push_back(std::move(s));
        if (static_cast<int>(out.size()) > max_schemes)
          throw budget_error("scheme enumeration exceeded max_schemes");
        continue;
      }
      // Stop with a strict-prefix right partial.
      int part_len = hi - p;
      if (part_len < tau.max_len()) {
        Word part = window.word.suffix(part_len);
        for (int a : reps)
          if (tau.image(a).size() > part_len && is_prefix(part, tau.image(a))) {
            Scheme s;
            s.cuts = f.cuts;
            s.letters = Word(tau.domain(), f.letters);
            s.left_partial = window.word.prefix(first - lo);
            s.right_partial = part;
            out.push_back(std::move(s));
            if (static_cast<int>(out.size()) > max_schemes)
              throw budget_error("scheme enumeration exceeded max_schemes");
            break;
          }
      }
      // Extend by one full segment (reverse order keeps DFS output sorted).
      for (auto it = reps.rbegin(); it != reps.rend(); ++it)
        if (segment_matches(window, p, tau.image(*it))) {
          Frame g = f;
          g.cuts.push_back(p + tau.image(*it).size());
          g.letters.push_back(*it);
          stack.push_back(std::move(g));
        }
    }
  }

  std::sort(out.begin(), out.end());
  for (Scheme& s : out) {
    int k0 = 0;
    for (size_t i = 0; i < s.cuts.size(); ++i)
      if (s.cuts[i] <= 0) k0 = static_cast<int>(i);
    s.k0_index = k0;
  }
  return out;
}

namespace {

// Cuts strictly inside the window.  A cut at the exact window edge is a
// representation artifact: the same configuration parse shows a complete
// final image or a partial one depending only on content outside the
// window, so schemes are compared without edge cuts.
std::vector<int> interior_cuts(const Window& win, const Scheme& s) {
  std::vector<int> out;
  for (int k : s.cuts)
    if (k > win.lo() && k < win.hi()) out.push_back(k);
  return out;
}

// Visible merge test for two schemes of right-half-agreeing windows: some
// cut k_j = k'_{j'} (j, j' in [0, r]) from which the interior cut tails are
// identical and the window contents agree.
bool schemes_merge(const Window& w1, const Scheme& s1, const Window& w2, const Scheme& s2,
                   int r) {
  auto interior_tail = [](const Window& w, const Scheme& s, size_t from) {
    std::vector<int> tail;
    for (size_t d = from; d < s.cuts.size(); ++d)
      if (s.cuts[d] < w.hi()) tail.push_back(s.cuts[d]);
    return tail;
  };
  for (int j = 0; j <= r; ++j) {
    size_t i1 = static_cast<size_t>(s1.k0_index + j);
    if (i1 >= s1.cuts.size()) break;
    for (int jp = 0; jp <= r; ++jp) {
      size_t i2 = static_cast<size_t>(s2.k0_index + jp);
      if (i2 >= s2.cuts.size()) continue;
      int k = s1.cuts[i1];
      if (k != s2.cuts[i2]) continue;
      if (interior_tail(w1, s1, i1) != interior_tail(w2, s2, i2)) continue;
      bool content_equal = true;
      for (int pos = k; pos < w1.hi() && content_equal; ++pos)
        content_equal = w1.at(pos) == w2.at(pos);
      if (content_equal) return true;
    }
  }
  return false;
}

}  // namespace

QuasiRecognizabilityReport probe_quasi_recognizability(const Substitution& tau,
                                                       const LanguageSource& lang, int m,
                                                       const ExecPolicy& policy) {
  if (m < 2 * tau.max_len())
    throw std::invalid_argument("probe needs M >= 2 * max_len");
  const std::set<Word>& word_set = lang.words(2 * m);
  std::vector<Word> words(word_set.begin(), word_set.end());
  const int n = static_cast<int>(words.size());

  int best = std::numeric_limits<int>::max();
  std::string error;
#ifdef EXPANSE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(policy.resolved_threads()) \
    reduction(min : best) if (!policy.serial())
#endif
  for (int i = 0; i < n; ++i) {
    try {
      Window win{words[static_cast<size_t>(i)], m};
      std::set<std::vector<int>> classes;
      for (const Scheme& s : enumerate_standard_schemes(tau, win))
        classes.insert(interior_cuts(win, s));
      if (classes.size() >= 2 && i < best) best = i;
    } catch (const std::exception& e) {
#ifdef EXPANSE_HAVE_OPENMP
#pragma omp critical
#endif
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw budget_error(error);

  QuasiRecognizabilityReport report;
  report.window_half_width = m;
  if (best < n) {
    report.refuted = true;
    Window win{words[static_cast<size_t>(best)], m};
    report.counterexample = win;
    // One representative per genuinely distinct parse.
    std::set<std::vector<int>> seen;
    for (Scheme& s : enumerate_standard_schemes(tau, win))
      if (seen.insert(interior_cuts(win, s)).second) report.schemes.push_back(std::move(s));
  }
  return report;
}

RadiusProbeReport probe_right_radius(const Substitution& tau, const LanguageSource& lang, int r,
                                     int m, const ExecPolicy& policy) {
  if (r < 0) throw std::invalid_argument("radius must be >= 0");
  if (m < (r + 2) * tau.max_len())
    throw std::invalid_argument("probe needs M >= (R + 2) * max_len");
  const std::set<Word>& word_set = lang.words(2 * m);
  std::vector<Word> words(word_set.begin(), word_set.end());

  // Group windows by their agreed right halves [0, M).
  std::map<Word, std::vector<int>> by_right;
  for (size_t i = 0; i < words.size(); ++i)
    by_right[words[i].suffix(m)].push_back(static_cast<int>(i));
  std::vector<const std::vector<int>*> groups;
  groups.reserve(by_right.size());
  for (const auto& [right, idxs] : by_right) groups.push_back(&idxs);
  const int g = static_cast<int>(groups.size());

  // A violation is encoded as (group, member1, scheme1, member2, scheme2);
  // the lexicographically first one is reported.
  using Violation = std::array<int, 5>;
  const Violation none{std::numeric_limits<int>::max(), 0, 0, 0, 0};
  Violation first = none;
  std::string error;

#ifdef EXPANSE_HAVE_OPENMP
#pragma omp parallel num_threads(policy.resolved_threads()) if (!policy.serial())
#endif
  {
    Violation local = none;
#ifdef EXPANSE_HAVE_OPENMP
#pragma omp for schedule(dynamic) nowait
#endif
    for (int gi = 0; gi < g; ++gi) {
      try {
        const std::vector<int>& members = *groups[static_cast<size_t>(gi)];
        std::vector<std::vector<Scheme>> schemes(members.size());
        for (size_t mi = 0; mi < members.size(); ++mi)
          schemes[mi] = enumerate_standard_schemes(
              tau, Window{words[static_cast<size_t>(members[mi])], m});
        bool done = false;
        for (size_t m1 = 0; m1 < members.size() && !done; ++m1)
          for (size_t a = 0; a < schemes[m1].size() && !done; ++a)
            for (size_t m2 = m1; m2 < members.size() && !done; ++m2)
              for (size_t b = m2 == m1 ? a + 1 : 0; b < schemes[m2].size() && !done; ++b) {
                Window w1{words[static_cast<size_t>(members[m1])], m};
                Window w2{words[static_cast<size_t>(members[m2])], m};
                if (!schemes_merge(w1, schemes[m1][a], w2, schemes[m2][b], r)) {
                  Violation v{gi, static_cast<int>(m1), static_cast<int>(a),
                              static_cast<int>(m2), static_cast<int>(b)};
                  if (v < local) local = v;
                  done = true;
                }
              }
      } catch (const std::exception& e) {
#ifdef EXPANSE_HAVE_OPENMP
#pragma omp critical
#endif
        if (error.empty()) error = e.what();
      }
    }
#ifdef EXPANSE_HAVE_OPENMP
#pragma omp critical
#endif
    if (local < first) first = local;
  }
  if (!error.empty()) throw budget_error(error);

  RadiusProbeReport report;
  report.radius = r;
  report.window_half_width = m;
  if (first[0] < g) {
    report.refuted = true;
    const std::vector<int>& members = *groups[static_cast<size_t>(first[0])];
    Window w1{words[static_cast<size_t>(members[static_cast<size_t>(first[1])])], m};
    Window w2{words[static_cast<size_t>(members[static_cast<size_t>(first[3])])], m};
    auto s1 = enumerate_standard_schemes(tau, w1);
    auto s2 = enumerate_standard_schemes(tau, w2);
    report.counterexample = {w1, w2};
    report.schemes = {s1[static_cast<size_t>(first[2])], s2[static_cast<size_t>(first[4])]};
  }
  return report;
}

int radius_compose(int r_outer, int min_len_inner, int r_inner) {
  if (r_outer < 0 || r_inner < 0) throw std::invalid_argument("radii must be >= 0");
  if (min_len_inner < 1) throw std::invalid_argument("min length must be >= 1");
  return r_inner + (r_outer + min_len_inner - 1) / min_len_inner;
}

std::optional<int> radius_series_bound(const DirectiveSequence& seq,
                                       const std::vector<int>& radii, int t_max) {
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  if (static_cast<int>(radii.size()) < t_max)
    throw std::invalid_argument("need one radius per level up to t_max");
  for (int r : radii)
    if (r < 0) throw std::invalid_argument("radii must be >= 0");

  const uint64_t sat = std::numeric_limits<uint64_t>::max();
  auto sat_add = [&](uint64_t a, uint64_t b) { return a > sat - b ? sat : a + b; };
  auto sat_mul = [&](uint64_t a, uint64_t b) {
    return b != 0 && a > sat / b ? sat : a * b;
  };

  uint64_t series = 0;
  uint64_t m_all = 0, m_early = 0;
  for (int t = 1; t <= t_max; ++t) {
    series = sat_add(series, sat_mul(static_cast<uint64_t>(radii[static_cast<size_t>(t - 1)]),
                                     seq.block_min_len(t)));
    uint64_t denom = seq.block_min_len(t);
    uint64_t m_t = series / denom + (series % denom != 0 ? 1 : 0);
    m_all = std::max(m_all, m_t);
    if (t <= t_max - seq.cycle_size()) m_early = std::max(m_early, m_t);
  }
  // The requirement must have stopped growing over the last full cycle of
  // levels; otherwise no finite m is certified at this horizon.
  if (t_max > seq.cycle_size() && m_all > m_early) return std::nullopt;
  if (m_all > static_cast<uint64_t>(std::numeric_limits<int>::max())) return std::nullopt;
  return static_cast<int>(m_all);
}

}  // namespace expanse
