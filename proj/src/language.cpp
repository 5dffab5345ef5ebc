/* language.cpp -- finite-window languages of substitution limit sets */

#include "expanse/language.hpp"

#include <cmath>
#include <stdexcept>

#include "expanse/errors.hpp"

namespace expanse {

LanguageSource::LanguageSource(std::string name, AlphabetRef alphabet, int budget,
                               std::function<std::set<Word>(int)> compute)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      budget_(budget),
      compute_(std::move(compute)) {
  if (budget_ < 1) throw std::invalid_argument("language budget must be >= 1");
}

const std::set<Word>& LanguageSource::words(int r) const {
  if (r < 1) throw std::invalid_argument("window length must be >= 1");
  if (r > budget_)
    throw budget_error("window length " + std::to_string(r) + " exceeds language budget " +
                       std::to_string(budget_) + " for " + name_);
  auto it = cache_.find(r);
  if (it == cache_.end()) it = cache_.emplace(r, compute_(r)).first;
  return it->second;
}

bool LanguageSource::contains(const Word& w) const {
  if (w.empty()) return true;
  const std::set<Word>& level = words(w.size());
  return level.count(w) > 0;
}

namespace {

using PairSet = std::set<std::pair<int32_t, int32_t>>;

// One-level pair transfer: the adjacent-letter pairs visible at level t given
// the pairs available at level t+1.  A pair on the deeper level contributes
// its junction; every letter occurring in some deeper pair contributes the
// pairs inside its image.
PairSet transfer_pairs(const Substitution& tau, const PairSet& deeper) {
  PairSet out;
  std::set<int32_t> letters;
  for (const auto& [a, b] : deeper) {
    letters.insert(a);
    letters.insert(b);
  }
  for (int32_t c : letters) {
    const Word& w = tau.image(c);
    for (int i = 0; i + 1 < w.size(); ++i) out.emplace(w[i], w[i + 1]);
  }
  for (const auto& [a, b] : deeper) {
    const Word& wa = tau.image(a);
    const Word& wb = tau.image(b);
    out.emplace(wa[wa.size() - 1], wb[0]);
  }
  return out;
}

PairSet full_pairs(const AlphabetRef& alphabet) {
  PairSet out;
  for (int32_t a = 0; a < alphabet->size(); ++a)
    for (int32_t b = 0; b < alphabet->size(); ++b) out.emplace(a, b);
  return out;
}

}  // namespace

std::set<std::pair<int32_t, int32_t>> realizable_pairs(const DirectiveSequence& seq, int t) {
  // Greatest fixpoint of the one-cycle transfer at the phase of level
  // max(t, transient size); iteration from the full pair set decreases
  // monotonically, so it stabilizes within |A|^2 + 1 rounds.
  int anchor = std::max(t, seq.transient_size());
  DirectiveSequence from_anchor = seq.shifted(anchor);
  const AlphabetRef& alpha = from_anchor.alphabet(0);

  auto one_cycle = [&](const PairSet& deep) {
    PairSet cur = deep;
    for (int j = from_anchor.cycle_size() - 1; j >= 0; --j)
      cur = transfer_pairs(from_anchor.cycle()[static_cast<size_t>(j)], cur);
    return cur;
  };
  PairSet pairs = full_pairs(alpha);
  int cap = alpha->size() * alpha->size() + 1;
  for (int i = 0; i < cap; ++i) {
    PairSet next = one_cycle(pairs);
    if (next == pairs) break;
    pairs = std::move(next);
  }
  // Pull the fixpoint down from the anchor to the requested level.
  for (int s = anchor - 1; s >= t; --s) pairs = transfer_pairs(seq.at(s), pairs);
  return pairs;
}

std::set<Word> directive_language_at_level(const DirectiveSequence& seq, int r, int t) {
  if (seq.block_min_len(t) < static_cast<uint64_t>(r))
    throw std::invalid_argument("level too shallow for requested window length");
  Substitution blk = seq.block(0, t);
  std::set<Word> out;
  for (const auto& [a, b] : realizable_pairs(seq, t)) {
    Word pair_word(seq.alphabet(t), {a, b});
    Word image = blk.expand(pair_word);
    auto facs = factors(image, r);
    out.insert(facs.begin(), facs.end());
  }
  return out;
}

LanguageSource directive_language(const DirectiveSequence& seq, int budget) {
  if (!seq.is_everywhere_growing())
    throw premise_error("everywhere_growing",
                        "limit-set language needs an everywhere-growing sequence");
  AlphabetRef alpha = seq.alphabet(0);
  auto compute = [seq](int r) {
    int t = 0;
    while (seq.block_min_len(t) < static_cast<uint64_t>(r)) ++t;
    return directive_language_at_level(seq, r, t);
  };
  return LanguageSource("limit_set", alpha, budget, compute);
}

LanguageSource full_shift_language(const AlphabetRef& alphabet, int budget) {
  auto compute = [alphabet](int r) {
    std::set<Word> out;
    std::vector<int32_t> cur(static_cast<size_t>(r), 0);
    while (true) {
      out.insert(Word(alphabet, cur));
      int i = r - 1;
      while (i >= 0 && cur[static_cast<size_t>(i)] == alphabet->size() - 1) {
        cur[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++cur[static_cast<size_t>(i)];
    }
    return out;
  };
  return LanguageSource("full_shift", alphabet, budget, compute);
}

LanguageSource periodic_orbit_language(const Word& u, int budget) {
  if (u.empty()) throw std::invalid_argument("periodic orbit needs a non-empty word");
  auto compute = [u](int r) {
    Word big = u;
    while (big.size() < r + u.size()) big.append(u);
    return factors(big, r);
  };
  return LanguageSource("periodic_orbit", u.alphabet(), budget, compute);
}

std::vector<uint64_t> complexity(const LanguageSource& lang, int r_max) {
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  std::vector<uint64_t> out;
  out.reserve(static_cast<size_t>(r_max));
  for (int r = 1; r <= r_max; ++r) out.push_back(lang.words(r).size());
  return out;
}

EntropyEstimate entropy_estimate(const std::vector<uint64_t>& table) {
  if (table.empty()) throw std::invalid_argument("empty complexity table");
  EntropyEstimate est;
  int r_max = static_cast<int>(table.size());
  est.tail_estimate = std::log(static_cast<double>(table.back())) / r_max;

  // Least-squares slope of y_r = ln p(r) / r over the top half of the range;
  // a settled running estimate gives slope ~ 0.
  int lo = (r_max + 1) / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int r = lo; r <= r_max; ++r) {
    double y = std::log(static_cast<double>(table[static_cast<size_t>(r - 1)])) / r;
    sx += r;
    sy += y;
    sxx += static_cast<double>(r) * r;
    sxy += r * y;
    ++n;
  }
  double denom = n * sxx - sx * sx;
  est.slope = denom == 0 ? 0.0 : (n * sxy - sx * sy) / denom;
  return est;
}

std::optional<AsymptoticWitness> asymptotic_periodic_witness(const LanguageSource& lang,
                                                             int m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  const AlphabetRef& alpha = lang.alphabet();
  auto run = [&](int32_t letter, int count) {
    return Word(alpha, std::vector<int32_t>(static_cast<size_t>(count), letter));
  };
  for (int32_t a = 0; a < alpha->size(); ++a)
    for (int32_t b = 0; b < alpha->size(); ++b) {
      if (a == b) continue;
      bool all = true;
      for (int m = 1; m <= m_max && all; ++m)
        all = lang.contains(run(a, m) + run(b, m));
      if (all) {
        AsymptoticWitness w;
        w.pattern = "a^m b^m";
        w.a = a;
        w.b = b;
        w.m_max = m_max;
        w.example = run(a, m_max) + run(b, m_max);
        return w;
      }
    }
  for (int32_t a = 0; a < alpha->size(); ++a)
    for (int32_t b = 0; b < alpha->size(); ++b) {
      if (a == b) continue;
      bool all = true;
      for (int m = 1; m <= m_max && all; ++m)
        all = lang.contains(run(a, m) + run(b, 1) + run(a, m));
      if (all) {
        AsymptoticWitness w;
        w.pattern = "a^m b a^m";
        w.a = a;
        w.b = b;
        w.m_max = m_max;
        w.example = run(a, m_max) + run(b, 1) + run(a, m_max);
        return w;
      }
    }
  return std::nullopt;
}

}  // namespace expanse
