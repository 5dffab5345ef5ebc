/* certify.cpp -- positive-expansiveness certificates for directive sequences */

#include "expanse/certify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "expanse/errors.hpp"
#include "expanse/language.hpp"
#include "expanse/parsing.hpp"

namespace expanse {

namespace {

uint64_t sat_pow(uint64_t base, uint64_t exp) {
  const uint64_t sat = std::numeric_limits<uint64_t>::max();
  uint64_t out = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > sat / base) return sat;
    out *= base;
  }
  return out;
}

// The distinct levels of a preperiodic sequence: transient entries plus one
// cycle; every deeper level repeats one of these.
std::vector<const Substitution*> distinct_levels(const DirectiveSequence& seq) {
  std::vector<const Substitution*> out;
  for (const Substitution& s : seq.transient()) out.push_back(&s);
  for (const Substitution& s : seq.cycle()) out.push_back(&s);
  return out;
}

std::optional<int32_t> single_letter_power(const Word& w) {
  for (int i = 1; i < w.size(); ++i)
    if (w[i] != w[0]) return std::nullopt;
  return w[0];
}

// Detects an infinite chain of letters a_t with tau_t(a_{t+1}) a power of
// a_t along the cycle; such a chain produces a periodic point of the limit
// set, and its absence is the aperiodicity screen.
bool has_constant_power_chain(const DirectiveSequence& seq) {
  const int L = seq.cycle_size();
  // Node (phase j, letter of the phase-j alphabet); edge from the deeper
  // letter to the letter whose power it maps to.
  std::vector<int> offsets(static_cast<size_t>(L) + 1, 0);
  for (int j = 0; j < L; ++j)
    offsets[static_cast<size_t>(j) + 1] =
        offsets[static_cast<size_t>(j)] + seq.cycle()[static_cast<size_t>(j)].codomain()->size();
  const int nodes = offsets[static_cast<size_t>(L)];
  std::vector<std::vector<int>> adj(static_cast<size_t>(nodes));
  for (int j = 0; j < L; ++j) {
    const Substitution& tau = seq.cycle()[static_cast<size_t>(j)];
    int next_phase = (j + 1) % L;
    for (int a = 0; a < tau.domain()->size(); ++a)
      if (auto b = single_letter_power(tau.image(a)))
        adj[static_cast<size_t>(offsets[static_cast<size_t>(next_phase)] + a)].push_back(
            offsets[static_cast<size_t>(j)] + *b);
  }
  // Cycle detection.
  std::vector<int> state(static_cast<size_t>(nodes), 0);
  std::vector<std::pair<int, size_t>> stack;
  for (int start = 0; start < nodes; ++start) {
    if (state[static_cast<size_t>(start)] != 0) continue;
    stack.push_back({start, 0});
    state[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < adj[static_cast<size_t>(v)].size()) {
        int w = adj[static_cast<size_t>(v)][i++];
        if (state[static_cast<size_t>(w)] == 1) return true;
        if (state[static_cast<size_t>(w)] == 0) {
          state[static_cast<size_t>(w)] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[static_cast<size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

// Shortest word w (nonoverlapping, bounded length) making tau a return
// substitution with respect to w.  Any admissible w is a prefix of every
// tau(a)^infinity, so candidates are prefixes of one such power.
std::optional<Word> find_return_word(const Substitution& tau) {
  if (!tau.is_injective()) return std::nullopt;
  Word power = tau.image(0);
  while (power.size() < 2 * tau.max_len()) power.append(tau.image(0));
  for (int len = 1; len <= 2 * tau.max_len() && len <= power.size(); ++len) {
    Word w = power.prefix(len);
    if (!is_nonoverlapping(w)) continue;
    if (is_return_substitution(tau, w)) return w;
  }
  return std::nullopt;
}

struct RecogStatus {
  bool conclusive = false;
  bool refuted = false;
  std::string route;  // "return_words" | "toeplitz_prefix" | "probe"
  std::string evidence;
  std::vector<Word> return_words;  // per distinct level when conclusive via returns
};

// Suffix-code test on the distinct images of a level.
bool level_suffix_code(const Substitution& tau) {
  return is_suffix_code(tau.images());
}

RecogStatus recognizability_status(const DirectiveSequence& seq, const LanguageSource& lang,
                                   const CertifyOptions& opt, bool aperiodic_screen_passed) {
  RecogStatus status;
  std::vector<const Substitution*> levels = distinct_levels(seq);

  // Conclusive route 1: every level is a return substitution with respect to
  // a nonoverlapping word.
  {
    std::vector<Word> ws;
    bool all = true;
    for (const Substitution* tau : levels) {
      auto w = find_return_word(*tau);
      if (!w) {
        all = false;
        break;
      }
      ws.push_back(*w);
    }
    if (all) {
      status.conclusive = true;
      status.route = "return_words";
      std::ostringstream ev;
      ev << "every level returns to a nonoverlapping word:";
      for (const Word& w : ws) ev << " '" << w.str() << "'";
      status.evidence = ev.str();
      status.return_words = ws;
      return status;
    }
  }

  // Conclusive route 2: Toeplitz levels whose shared prefix is long and
  // nonoverlapping, over an aperiodic limit set.
  {
    bool all = true;
    for (const Substitution* tau : levels)
      if (!is_toeplitz(*tau)) {
        all = false;
        break;
      }
    if (all && aperiodic_screen_passed) {
      bool prefixes_ok = true;
      for (const Substitution* tau : levels) {
        Word u = maximal_common_prefix(*tau);
        if (u.empty() || !is_nonoverlapping(u) || 2 * u.size() < tau->min_len()) {
          prefixes_ok = false;
          break;
        }
      }
      if (prefixes_ok) {
        status.conclusive = true;
        status.route = "toeplitz_prefix";
        status.evidence =
            "uniform left-proper levels with nonoverlapping shared prefixes of at least half "
            "the image length, over an aperiodic limit set";
        return status;
      }
    }
  }

  // Probe: search composed blocks for a window with two standard schemes.
  status.route = "probe";
  std::ostringstream ev;
  int probed = 0;
  for (int t = 1; t <= opt.probe_levels; ++t) {
    Substitution blk = seq.block(0, t);
    int m = std::max(opt.probe_window, 2 * blk.max_len());
    if (2 * m > opt.lang_budget) break;
    QuasiRecognizabilityReport report;
    try {
      report = probe_quasi_recognizability(blk, lang, m, opt.policy);
    } catch (const budget_error&) {
      break;
    }
    ++probed;
    if (report.refuted) {
      status.refuted = true;
      ev << "a width-" << 2 * m << " window of the depth-" << t
         << " block carries two standard schemes: '" << report.counterexample->word.str() << "'";
      status.evidence = ev.str();
      return status;
    }
  }
  if (probed == 0) {
    status.evidence = "no block probed within the language budget";
  } else {
    ev << "no window up to half-width " << std::max(opt.probe_window, 2) << " carries two "
       << "standard schemes for the first " << probed << " composed blocks";
    status.evidence = ev.str();
  }
  return status;
}

Premise make_premise(std::string name, std::string outcome, std::string evidence,
                     bool conclusive) {
  return Premise{std::move(name), std::move(outcome), std::move(evidence), conclusive};
}

Premise recog_premise(const RecogStatus& recog) {
  if (recog.conclusive)
    return make_premise("quasi_recognizability", "holds", recog.route + ": " + recog.evidence,
                        true);
  if (recog.refuted)
    return make_premise("quasi_recognizability", "refuted", recog.evidence, true);
  return make_premise("quasi_recognizability", "evidence", recog.evidence, false);
}

// Per-level right radius for the series rule: 1 for suffix-code levels,
// otherwise the smallest probed radius that no window pair refutes.
std::optional<int> level_radius(const DirectiveSequence& seq, int level,
                                const CertifyOptions& opt, bool& probed_evidence) {
  const Substitution& tau = seq.at(level);
  if (level_suffix_code(tau)) return 1;
  probed_evidence = true;
  LanguageSource lang = directive_language(seq.shifted(level), opt.lang_budget);
  for (int r = 0; r <= opt.radius_cap; ++r) {
    int m = std::max(opt.probe_window, (r + 2) * tau.max_len());
    if (2 * m > opt.lang_budget) return std::nullopt;
    try {
      RadiusProbeReport report = probe_right_radius(tau, lang, r, m, opt.policy);
      if (!report.refuted) return r;
    } catch (const budget_error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

Certificate certify(const DirectiveSequence& seq, const CertifyOptions& opt) {
  Certificate cert;
  cert.rank = seq.rank();
  cert.weakly_primitive = seq.is_weakly_primitive();
  const uint64_t rk = static_cast<uint64_t>(cert.rank);

  // Exact screen: a rank-one cycle forces a single periodic orbit.
  if (cert.rank == 1) {
    cert.verdict = "bound";
    cert.bound = 1;
    cert.rule = "finite_shift";
    cert.premises.push_back(make_premise(
        "finite_limit_set", "holds", "some cycle alphabet has one letter", true));
    return cert;
  }

  bool growing = seq.is_everywhere_growing();
  cert.premises.push_back(make_premise("everywhere_growing", growing ? "holds" : "fails",
                                       "decided on the length-one-image digraph of the cycle",
                                       true));
  if (!growing) {
    cert.verdict = "inconclusive";
    cert.caveats.push_back("every rule needs an everywhere-growing sequence");
    return cert;
  }

  LanguageSource lang = directive_language(seq, opt.lang_budget);

  // Exact screen: complexity stabilization means a finite limit set.
  int scan_cap = std::min(opt.lang_budget - 1,
                          2 * seq.alphabet(0)->size() * seq.alphabet(0)->size() + 2);
  bool complexity_grew = true;
  for (int r = 1; r <= scan_cap; ++r) {
    size_t pr = lang.words(r).size(), pr1 = lang.words(r + 1).size();
    if (pr1 == pr) {
      cert.verdict = "bound";
      cert.bound = 1;
      cert.rule = "finite_shift";
      cert.premises.push_back(make_premise(
          "finite_limit_set", "holds",
          "complexity stabilizes at p(" + std::to_string(r) + ") = " + std::to_string(pr),
          true));
      return cert;
    }
  }

  // Negative screen: a letter pair whose periodic-looking patterns persist
  // at every depth forces unboundedly many predecessors.
  std::optional<AsymptoticWitness> witness;
  try {
    witness = asymptotic_periodic_witness(lang, opt.m_max);
  } catch (const budget_error&) {
    cert.caveats.push_back("asymptotic-periodicity screen skipped: witness depth exceeds the "
                           "language budget");
  }
  if (witness) {
    cert.verdict = "negative";
    cert.rule = "asymptotic_periodicity";
    cert.premises.push_back(make_premise(
        "periodic_cluster_witness", "holds",
        "pattern " + witness->pattern + " with a = '" +
            lang.alphabet()->letter(witness->a) + "', b = '" +
            lang.alphabet()->letter(witness->b) + "' lies in the language for every m <= " +
            std::to_string(witness->m_max),
        false));
    cert.caveats.push_back("witness patterns verified up to m_max = " +
                           std::to_string(witness->m_max) + " only");
    return cert;
  }

  // Aperiodicity screen: no constant-power chain and growing complexity.
  bool chain = has_constant_power_chain(seq);
  std::vector<const Substitution*> levels = distinct_levels(seq);
  bool all_toeplitz = std::all_of(levels.begin(), levels.end(),
                                  [](const Substitution* s) { return is_toeplitz(*s); });
  bool aperiodic_screen = !chain && complexity_grew;
  Premise aperiodicity = make_premise(
      "aperiodicity", aperiodic_screen ? (all_toeplitz ? "holds" : "evidence") : "fails",
      chain ? "a cycle of letters maps to powers of each other"
            : "no constant-power letter chain and complexity grew over the scanned range",
      all_toeplitz);

  RecogStatus recog = recognizability_status(seq, lang, opt, aperiodic_screen && all_toeplitz);

  bool all_right_marked = std::all_of(levels.begin(), levels.end(), [](const Substitution* s) {
    return s->is_right_marked();
  });
  Premise rank_premise = make_premise("finite_rank", "holds",
                                      "cycle alphabet rank " + std::to_string(cert.rank), true);

  auto finish_bound = [&](uint64_t bound, const std::string& rule,
                          std::optional<uint64_t> sharp) {
    cert.verdict = "bound";
    cert.bound = bound;
    cert.rule = rule;
    cert.sharp_above = sharp;
    if (!recog.conclusive)
      cert.caveats.push_back("recognizability supported by probe evidence only");
  };

  if (!recog.refuted) {
    // Rank-tier rules, conclusive recognizability first.
    if (recog.conclusive && all_right_marked) {
      cert.premises.push_back(make_premise("right_marked_levels", "holds",
                                           "last letters of the images are distinct at every "
                                           "level",
                                           true));
      cert.premises.push_back(recog_premise(recog));
      cert.premises.push_back(rank_premise);
      finish_bound(rk, "right_marked", rk - 1);
      return cert;
    }
    if (recog.conclusive && recog.route == "return_words") {
      cert.premises.push_back(make_premise("return_word_levels", "holds", recog.evidence, true));
      cert.premises.push_back(rank_premise);
      finish_bound(rk, "return_words", std::nullopt);
      return cert;
    }
    if (recog.conclusive && recog.route == "toeplitz_prefix") {
      cert.premises.push_back(make_premise("toeplitz_levels", "holds", recog.evidence, true));
      cert.premises.push_back(aperiodicity);
      cert.premises.push_back(rank_premise);
      finish_bound(rk, "toeplitz", std::nullopt);
      return cert;
    }
    if (all_right_marked) {
      cert.premises.push_back(make_premise("right_marked_levels", "holds",
                                           "last letters of the images are distinct at every "
                                           "level",
                                           true));
      cert.premises.push_back(recog_premise(recog));
      cert.premises.push_back(rank_premise);
      finish_bound(rk, "right_marked", rk - 1);
      return cert;
    }

    // Recoverable blocks: telescope to expanding blocks, then ask for
    // right-recoverability of every block level; composition closure extends
    // it to all deep blocks.
    {
      DirectiveSequence scoped = seq.is_expanding_levels() ? seq : seq.telescope_expanding();
      std::vector<const Substitution*> block_levels = distinct_levels(scoped);
      bool recoverable = std::all_of(block_levels.begin(), block_levels.end(),
                                     [](const Substitution* s) {
                                       return s->min_len() >= 2 &&
                                              max_right_recoverability(*s).has_value();
                                     });
      if (recoverable) {
        uint64_t scoped_rank = static_cast<uint64_t>(scoped.rank());
        cert.premises.push_back(make_premise(
            "recoverable_levels", "holds",
            "every telescoped block forgets its last letters recoverably", true));
        cert.premises.push_back(recog_premise(recog));
        cert.premises.push_back(make_premise("finite_rank", "holds",
                                             "telescoped cycle alphabet rank " +
                                                 std::to_string(scoped.rank()),
                                             true));
        finish_bound(scoped_rank, "recoverable_blocks", std::nullopt);
        return cert;
      }
    }

    // Suffix-code levels: rank squared.
    bool all_suffix_code = std::all_of(levels.begin(), levels.end(), [](const Substitution* s) {
      return level_suffix_code(*s);
    });
    if (all_suffix_code) {
      cert.premises.push_back(make_premise("suffix_code_levels", "holds",
                                           "the distinct images of every level form a suffix "
                                           "code",
                                           true));
      cert.premises.push_back(recog_premise(recog));
      cert.premises.push_back(rank_premise);
      finish_bound(sat_pow(rk, 2), "suffix_code", std::nullopt);
      return cert;
    }

    // Probed common radius: rank^(R+1).
    for (int radius = 0; radius <= opt.radius_cap; ++radius) {
      bool refuted = false;
      int probed = 0;
      for (int t = 1; t <= opt.probe_levels; ++t) {
        Substitution blk = seq.block(0, t);
        int m = std::max(opt.probe_window, (radius + 2) * blk.max_len());
        if (2 * m > opt.lang_budget) break;
        try {
          RadiusProbeReport report = probe_right_radius(blk, lang, radius, m, opt.policy);
          ++probed;
          if (report.refuted) {
            refuted = true;
            break;
          }
        } catch (const budget_error&) {
          break;
        }
      }
      if (!refuted && probed > 0) {
        cert.premises.push_back(make_premise(
            "common_right_radius", "evidence",
            "radius " + std::to_string(radius) + " not refuted on the first " +
                std::to_string(probed) + " composed blocks",
            false));
        cert.premises.push_back(recog_premise(recog));
        cert.premises.push_back(rank_premise);
        finish_bound(sat_pow(rk, static_cast<uint64_t>(radius) + 1), "common_radius",
                     std::nullopt);
        cert.caveats.push_back("the radius was probed on finitely many blocks");
        return cert;
      }
    }

    // Radius series catch-all: rank^(m+2).
    {
      bool probed_evidence = false;
      std::vector<int> radii;
      bool have_all = true;
      std::map<int, std::optional<int>> phase_cache;
      for (int i = 0; i < opt.series_t_max && have_all; ++i) {
        int key = i < seq.transient_size()
                      ? i
                      : seq.transient_size() + (i - seq.transient_size()) % seq.cycle_size();
        auto it = phase_cache.find(key);
        if (it == phase_cache.end())
          it = phase_cache.emplace(key, level_radius(seq, key, opt, probed_evidence)).first;
        if (!it->second) {
          have_all = false;
          break;
        }
        radii.push_back(*it->second);
      }
      if (have_all) {
        std::optional<int> m = radius_series_bound(seq, radii, opt.series_t_max);
        if (m) {
          cert.premises.push_back(make_premise(
              "radius_series", "evidence",
              "per-level radii keep the accumulated offset within " + std::to_string(*m) +
                  " deep blocks",
              false));
          cert.premises.push_back(recog_premise(recog));
          cert.premises.push_back(rank_premise);
          finish_bound(sat_pow(rk, static_cast<uint64_t>(*m) + 2), "radius_series",
                       std::nullopt);
          if (probed_evidence)
            cert.caveats.push_back("per-level radii rest on probe evidence");
          return cert;
        }
      }
    }
  }

  cert.verdict = "inconclusive";
  cert.premises.push_back(recog_premise(recog));
  cert.premises.push_back(aperiodicity);
  if (recog.refuted)
    cert.caveats.push_back(
        "quasi-recognizability was refuted; every bounding rule is unavailable");
  else
    cert.caveats.push_back("no rule of the ladder applied within the configured budgets");
  return cert;
}

Substitution arnoux_rauzy_generator(int rank, int index) {
  if (rank < 2) throw std::invalid_argument("generators need rank >= 2");
  if (index < 0 || index >= rank) throw std::invalid_argument("generator index out of range");
  std::vector<std::string> letters;
  for (int i = 1; i <= rank; ++i) letters.push_back("a" + std::to_string(i));
  AlphabetRef alpha = Alphabet::make(std::move(letters));
  std::vector<Word> images;
  for (int32_t j = 0; j < rank; ++j) {
    if (j == index)
      images.push_back(Word(alpha, {j}));
    else
      images.push_back(Word(alpha, {index, j}));
  }
  return Substitution(alpha, alpha, std::move(images));
}

Certificate certify_arnoux_rauzy(int rank, const std::vector<int>& transient_indices,
                                 const std::vector<int>& cycle_indices,
                                 const CertifyOptions& opt) {
  (void)opt;
  if (rank < 2) throw std::invalid_argument("rank must be >= 2");
  if (cycle_indices.empty()) throw std::invalid_argument("cycle must be non-empty");
  for (int i : transient_indices)
    if (i < 0 || i >= rank) throw std::invalid_argument("transient index out of range");
  std::set<int> distinct;
  for (int i : cycle_indices) {
    if (i < 0 || i >= rank) throw std::invalid_argument("cycle index out of range");
    distinct.insert(i);
  }
  if (distinct.size() < 2)
    throw std::invalid_argument(
        "cycle must visit at least two distinct generator indices; a constant tail gives a "
        "periodic-cluster limit with no finite bound");

  std::vector<Substitution> transient, cycle;
  for (int i : transient_indices) transient.push_back(arnoux_rauzy_generator(rank, i));
  for (int i : cycle_indices) cycle.push_back(arnoux_rauzy_generator(rank, i));
  DirectiveSequence seq(std::move(transient), std::move(cycle));

  if (!seq.is_everywhere_growing())
    throw std::logic_error("generator sequence with two distinct indices must grow");
  for (const Substitution* tau : distinct_levels(seq)) {
    bool found = false;
    for (int32_t a = 0; a < tau->codomain()->size() && !found; ++a)
      found = is_return_substitution(*tau, Word(tau->codomain(), {a}));
    if (!found) throw std::logic_error("generator must return to its own letter");
  }

  Certificate cert;
  cert.rank = rank;
  cert.weakly_primitive = seq.is_weakly_primitive();
  cert.verdict = "bound";
  cert.bound = static_cast<uint64_t>(rank);
  cert.sharp_above = static_cast<uint64_t>(rank) - 1;
  cert.rule = "arnoux_rauzy";
  std::ostringstream idx;
  for (size_t i = 0; i < cycle_indices.size(); ++i)
    idx << (i ? "," : "") << cycle_indices[static_cast<size_t>(i)];
  cert.premises.push_back(make_premise("two_distinct_indices_infinitely_often", "holds",
                                       "cycle indices (" + idx.str() + ")", true));
  cert.premises.push_back(make_premise("everywhere_growing", "holds",
                                       "decided on the length-one-image digraph of the cycle",
                                       true));
  cert.premises.push_back(make_premise(
      "return_word_levels", "holds",
      "each generator is a return substitution with respect to its own letter", true));
  cert.premises.push_back(make_premise("aperiodicity", "holds",
                                       "two generator indices repeat infinitely often", true));
  cert.premises.push_back(
      make_premise("finite_rank", "holds", "alphabet rank " + std::to_string(rank), true));
  return cert;
}

}  // namespace expanse
