/* predecessors.cpp -- counting left extensions of right windows in a language */

#include "expanse/predecessors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "expanse/errors.hpp"

namespace expanse {

PredecessorTable predecessor_table(const LanguageSource& lang, int ell, int right_len,
                                   const ExecPolicy& policy) {
  if (ell < 1 || right_len < 1)
    throw std::invalid_argument("predecessor table needs ell >= 1 and right_len >= 1");
  const std::set<Word>& full = lang.words(ell + right_len);

  // Split each word into (right window, left extension) and group by right
  // window; the language set is prefix-sorted, so re-sort by the split.
  std::vector<std::pair<Word, Word>> split;
  split.reserve(full.size());
  for (const Word& w : full) split.emplace_back(w.suffix(right_len), w.prefix(ell));
  std::sort(split.begin(), split.end());

  std::vector<size_t> starts;
  for (size_t i = 0; i < split.size(); ++i)
    if (i == 0 || !(split[i].first == split[i - 1].first)) starts.push_back(i);
  starts.push_back(split.size());
  const int groups = static_cast<int>(starts.size()) - 1;

  PredecessorTable table;
  table.ell = ell;
  table.right_len = right_len;
  table.counts.resize(static_cast<size_t>(groups));

#ifdef EXPANSE_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(policy.resolved_threads()) \
    if (!policy.serial())
#endif
  for (int gi = 0; gi < groups; ++gi) {
    size_t from = starts[static_cast<size_t>(gi)], to = starts[static_cast<size_t>(gi) + 1];
    table.counts[static_cast<size_t>(gi)] = {split[from].first, static_cast<int>(to - from)};
  }

  for (const auto& [right, count] : table.counts)
    if (count > table.max_count) {
      table.max_count = count;
      table.argmax = right;  // counts are sorted by right word: first max wins
    }
  return table;
}

DegreeProfile degree_profile(const LanguageSource& lang, int ell_max, int right_len,
                             const ExecPolicy& policy) {
  if (ell_max < 1) throw std::invalid_argument("ell_max must be >= 1");
  DegreeProfile profile;
  profile.right_len = right_len;
  for (int ell = 1; ell <= ell_max; ++ell)
    profile.max_by_ell.push_back(predecessor_table(lang, ell, right_len, policy).max_count);
  profile.constant_tail = true;
  for (int ell = (ell_max + 1) / 2; ell <= ell_max; ++ell)
    if (profile.max_by_ell[static_cast<size_t>(ell - 1)] != profile.max_by_ell.back())
      profile.constant_tail = false;
  return profile;
}

PersistenceReport persistent_witness(const LanguageSource& lang, int ell, int right_len,
                                     const ExecPolicy& policy) {
  PredecessorTable base = predecessor_table(lang, ell, right_len, policy);
  PredecessorTable doubled = predecessor_table(lang, ell, 2 * right_len, policy);
  PersistenceReport report;
  report.ell = ell;
  report.count = doubled.max_count;
  report.persists = doubled.max_count == base.max_count;
  report.witness = doubled.argmax;
  return report;
}

PredecessorBoundCheck verify_predecessor_bounds(const DirectiveSequence& seq, int t, int ell,
                                                int radius, int right_len, int budget,
                                                const ExecPolicy& policy) {
  if (t < 1) throw std::invalid_argument("level t must be >= 1");
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");

  const uint64_t sat = std::numeric_limits<uint64_t>::max();
  auto sat_add = [&](uint64_t a, uint64_t b) { return a > sat - b ? sat : a + b; };
  auto sat_mul = [&](uint64_t a, uint64_t b) { return b != 0 && a > sat / b ? sat : a * b; };
  auto sat_pow = [&](uint64_t base, int exp) {
    uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out = sat_mul(out, base);
    return out;
  };

  PredecessorBoundCheck check;
  check.t = t;
  check.ell = ell;
  check.radius = radius;

  // h = shortest image of a level-t window of length ell.
  Substitution blk = seq.block(0, t);
  LanguageSource deep = directive_language(seq.shifted(t), budget);
  uint64_t h = sat;
  for (const Word& u : deep.words(ell))
    h = std::min(h, static_cast<uint64_t>(blk.expand(u).size()));
  check.h = static_cast<int>(h);

  LanguageSource lang = directive_language(seq, budget);
  check.observed =
      static_cast<uint64_t>(predecessor_table(lang, check.h, right_len, policy).max_count);

  uint64_t min_len = seq.block_min_len(t);
  uint64_t max_len = seq.block_max_len(t);
  int j_lo = static_cast<int>((static_cast<uint64_t>(radius) * min_len + max_len - 1) / max_len);
  uint64_t letters = static_cast<uint64_t>(seq.alphabet(t)->size());
  uint64_t rank = static_cast<uint64_t>(seq.rank());
  for (int j = j_lo; j <= radius; ++j) {
    check.bound_letters = sat_add(check.bound_letters, sat_pow(letters, j + ell));
    check.bound_rank = sat_add(check.bound_rank, sat_pow(rank, j + 1));
  }
  check.ok_letters = check.observed <= check.bound_letters;
  check.ok_rank = check.observed <= check.bound_rank;
  return check;
}

}  // namespace expanse
