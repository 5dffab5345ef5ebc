/* directive.cpp -- preperiodic sequences of substitutions and their structure */

#include "expanse/directive.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "expanse/errors.hpp"

namespace expanse {

namespace {

uint64_t sat_add(uint64_t a, uint64_t b) {
  return a > std::numeric_limits<uint64_t>::max() - b ? std::numeric_limits<uint64_t>::max()
                                                      : a + b;
}

bool same_letter_set(const Alphabet& a, const Alphabet& b) {
  if (a.size() != b.size()) return false;
  for (const std::string& l : a.letters())
    if (!b.index(l)) return false;
  return true;
}

}  // namespace

DirectiveSequence::DirectiveSequence(std::vector<Substitution> transient,
                                     std::vector<Substitution> cycle)
    : transient_(std::move(transient)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("directive sequence needs a non-empty cycle");

  // Canonicalize level alphabets: level t's codomain is re-indexed onto the
  // previous level's domain, and the last cycle level's domain onto the cycle
  // start alphabet, so blocks compose across section and cycle boundaries.
  std::vector<Substitution*> levels;
  for (Substitution& s : transient_) levels.push_back(&s);
  for (Substitution& s : cycle_) levels.push_back(&s);
  for (size_t i = 1; i < levels.size(); ++i) {
    const AlphabetRef& expected = levels[i - 1]->domain();
    if (!same_letter_set(*levels[i]->codomain(), *expected))
      throw std::invalid_argument("directive levels do not chain: level " + std::to_string(i) +
                                  " codomain differs from previous domain");
    *levels[i] = rebind(*levels[i], levels[i]->domain(), expected);
  }
  const AlphabetRef& cycle_start = cycle_.front().codomain();
  if (!same_letter_set(*cycle_.back().domain(), *cycle_start))
    throw std::invalid_argument("cycle does not close: last domain differs from first codomain");
  cycle_.back() = rebind(cycle_.back(), cycle_start, cycle_.back().codomain());
}

DirectiveSequence DirectiveSequence::constant(const Substitution& tau) {
  if (!same_letter_set(*tau.domain(), *tau.codomain()))
    throw std::invalid_argument("constant sequence needs domain == codomain");
  return DirectiveSequence({}, {tau});
}

const Substitution& DirectiveSequence::at(int t) const {
  if (t < 0) throw std::out_of_range("negative level");
  if (t < transient_size()) return transient_[static_cast<size_t>(t)];
  return cycle_[static_cast<size_t>((t - transient_size()) % cycle_size())];
}

const AlphabetRef& DirectiveSequence::alphabet(int t) const { return at(t).codomain(); }

Substitution DirectiveSequence::block(int t_from, int t_to) const {
  if (t_from > t_to) throw std::invalid_argument("block range reversed");
  if (t_from == t_to) return Substitution::identity(alphabet(t_from));
  Substitution acc = at(t_from);
  for (int t = t_from + 1; t < t_to; ++t) acc = compose(acc, at(t));
  return acc;
}

uint64_t DirectiveSequence::block_min_len(int t) const {
  // lengths[a] = |tau_[0,s)(a)| for the current level-s alphabet.
  std::vector<uint64_t> lengths(static_cast<size_t>(alphabet(0)->size()), 1);
  for (int s = 0; s < t; ++s) {
    const Substitution& tau = at(s);
    std::vector<uint64_t> next(static_cast<size_t>(tau.domain()->size()), 0);
    for (int a = 0; a < tau.domain()->size(); ++a)
      for (int32_t b : tau.image(a).letters())
        next[static_cast<size_t>(a)] =
            sat_add(next[static_cast<size_t>(a)], lengths[static_cast<size_t>(b)]);
    lengths = std::move(next);
  }
  return *std::min_element(lengths.begin(), lengths.end());
}

uint64_t DirectiveSequence::block_max_len(int t) const {
  std::vector<uint64_t> lengths(static_cast<size_t>(alphabet(0)->size()), 1);
  for (int s = 0; s < t; ++s) {
    const Substitution& tau = at(s);
    std::vector<uint64_t> next(static_cast<size_t>(tau.domain()->size()), 0);
    for (int a = 0; a < tau.domain()->size(); ++a)
      for (int32_t b : tau.image(a).letters())
        next[static_cast<size_t>(a)] =
            sat_add(next[static_cast<size_t>(a)], lengths[static_cast<size_t>(b)]);
    lengths = std::move(next);
  }
  return *std::max_element(lengths.begin(), lengths.end());
}

int DirectiveSequence::rank() const {
  int r = cycle_.front().codomain()->size();
  for (const Substitution& tau : cycle_) r = std::min(r, tau.codomain()->size());
  return r;
}

bool DirectiveSequence::is_everywhere_growing() const {
  // Compose one full cycle starting at the cycle's first level.
  Substitution pi = cycle_.front();
  for (size_t j = 1; j < cycle_.size(); ++j) pi = compose(pi, cycle_[j]);
  // Follow the single-letter-image map; a cycle among such letters means some
  // letter's image length stays 1 forever.
  int n = pi.domain()->size();
  std::vector<int> state(static_cast<size_t>(n), 0);  // 0 unvisited, 1 on stack, 2 done
  for (int start = 0; start < n; ++start) {
    int a = start;
    std::vector<int> path;
    while (state[static_cast<size_t>(a)] == 0 && pi.image(a).size() == 1) {
      state[static_cast<size_t>(a)] = 1;
      path.push_back(a);
      a = pi.image(a)[0];
    }
    if (state[static_cast<size_t>(a)] == 1 && pi.image(a).size() == 1) return false;
    for (int b : path) state[static_cast<size_t>(b)] = 2;
  }
  return true;
}

bool DirectiveSequence::is_expanding_levels() const {
  for (const Substitution& tau : transient_)
    if (!tau.is_expanding()) return false;
  for (const Substitution& tau : cycle_)
    if (!tau.is_expanding()) return false;
  return true;
}

DirectiveSequence DirectiveSequence::telescope_expanding() const {
  if (!is_everywhere_growing())
    throw premise_error("everywhere_growing", "telescoping needs a growing sequence");
  int max_alpha = 0;
  for (const Substitution& tau : cycle_) max_alpha = std::max(max_alpha, tau.codomain()->size());
  const int step_cap = transient_size() + (max_alpha + 2) * cycle_size();

  // Greedy boundaries: extend each block until its min image length is >= 2.
  // Once boundaries enter the pure cycle the greedy step depends only on the
  // phase, so the first repeated phase closes the telescoped cycle.
  std::vector<int> boundaries{0};
  std::map<int, int> phase_seen;  // phase of a boundary in the cycle -> index in boundaries
  int new_transient = -1, repeat_at = -1;
  while (true) {
    int start = boundaries.back();
    if (start >= transient_size()) {
      int phase = (start - transient_size()) % cycle_size();
      auto it = phase_seen.find(phase);
      if (it != phase_seen.end()) {
        new_transient = it->second;
        repeat_at = static_cast<int>(boundaries.size()) - 1;
        break;
      }
      phase_seen.emplace(phase, static_cast<int>(boundaries.size()) - 1);
    }
    std::vector<uint64_t> lengths(static_cast<size_t>(alphabet(start)->size()), 1);
    int t = start;
    while (true) {
      const Substitution& tau = at(t);
      std::vector<uint64_t> next(static_cast<size_t>(tau.domain()->size()), 0);
      for (int a = 0; a < tau.domain()->size(); ++a)
        for (int32_t b : tau.image(a).letters())
          next[static_cast<size_t>(a)] =
              sat_add(next[static_cast<size_t>(a)], lengths[static_cast<size_t>(b)]);
      lengths = std::move(next);
      ++t;
      if (*std::min_element(lengths.begin(), lengths.end()) >= 2) break;
      if (t - start > step_cap)
        throw std::logic_error("telescoping step exceeded preperiodicity cap");
    }
    boundaries.push_back(t);
  }

  std::vector<Substitution> new_trans, new_cycle;
  for (int i = 0; i < new_transient; ++i)
    new_trans.push_back(block(boundaries[static_cast<size_t>(i)],
                              boundaries[static_cast<size_t>(i) + 1]));
  for (int i = new_transient; i < repeat_at; ++i)
    new_cycle.push_back(block(boundaries[static_cast<size_t>(i)],
                              boundaries[static_cast<size_t>(i) + 1]));
  return DirectiveSequence(std::move(new_trans), std::move(new_cycle));
}

bool DirectiveSequence::is_weakly_primitive() const {
  int max_alpha = 0;
  for (const Substitution& tau : cycle_) max_alpha = std::max(max_alpha, tau.codomain()->size());
  for (const Substitution& tau : transient_)
    max_alpha = std::max(max_alpha, tau.codomain()->size());
  const int cap = transient_size() + (max_alpha * max_alpha + 1) * cycle_size();

  // Every phase must be checked; levels past transient + one cycle repeat.
  for (int t = 0; t < transient_size() + cycle_size(); ++t) {
    std::vector<std::vector<bool>> prod = incidence(at(t));
    bool positive = false;
    for (int s = t + 1; s - t <= cap; ++s) {
      positive = true;
      for (const auto& row : prod)
        for (bool v : row)
          if (!v) {
            positive = false;
            break;
          }
      if (positive) break;
      // prod(b, a) over A_t x A_s; extend by level s.
      std::vector<std::vector<bool>> next_m = incidence(at(s));
      size_t rows = prod.size(), mids = next_m.size(), cols = next_m.front().size();
      std::vector<std::vector<bool>> next(rows, std::vector<bool>(cols, false));
      for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < mids; ++k)
          if (prod[i][k])
            for (size_t j = 0; j < cols; ++j)
              if (next_m[k][j]) next[i][j] = true;
      prod = std::move(next);
    }
    if (!positive) return false;
  }
  return true;
}

DirectiveSequence DirectiveSequence::shifted(int t) const {
  if (t < 0) throw std::out_of_range("negative level");
  std::vector<Substitution> trans, cyc;
  for (int s = t; s < transient_size(); ++s) trans.push_back(at(s));
  int phase = t < transient_size() ? 0 : (t - transient_size()) % cycle_size();
  for (int j = 0; j < cycle_size(); ++j)
    cyc.push_back(cycle_[static_cast<size_t>((phase + j) % cycle_size())]);
  return DirectiveSequence(std::move(trans), std::move(cyc));
}

bool DirectiveSequence::operator==(const DirectiveSequence& other) const {
  return transient_ == other.transient_ && cycle_ == other.cycle_;
}

DirectiveSequence parse_directive(std::string_view text) {
  std::vector<std::vector<std::string>> transient_chunks, cycle_chunks;
  std::vector<std::vector<std::string>>* section = nullptr;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string s = line;
    if (size_t hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = s.find_last_not_of(" \t\r");
    s = s.substr(b, e - b + 1);
    if (s == "[transient]") {
      section = &transient_chunks;
      section->emplace_back();
      continue;
    }
    if (s == "[cycle]") {
      section = &cycle_chunks;
      section->emplace_back();
      continue;
    }
    if (s == "---") {
      if (!section) throw std::invalid_argument("directive separator before any section");
      section->emplace_back();
      continue;
    }
    if (!section) throw std::invalid_argument("directive line outside any section: " + s);
    section->back().push_back(s);
  }

  auto build = [](const std::vector<std::vector<std::string>>& chunks) {
    std::vector<Substitution> subs;
    for (const auto& chunk : chunks) {
      if (chunk.empty()) continue;
      std::string joined;
      for (const std::string& l : chunk) {
        joined += l;
        joined += '\n';
      }
      subs.push_back(parse_substitution(joined));
    }
    return subs;
  };
  std::vector<Substitution> cycle = build(cycle_chunks);
  if (cycle.empty()) throw std::invalid_argument("directive file needs a non-empty [cycle]");
  return DirectiveSequence(build(transient_chunks), std::move(cycle));
}

std::string print_directive(const DirectiveSequence& seq) {
  std::string out;
  if (seq.transient_size() > 0) {
    out += "[transient]\n";
    for (int i = 0; i < seq.transient_size(); ++i) {
      if (i > 0) out += "---\n";
      out += print_substitution(seq.transient()[static_cast<size_t>(i)]);
    }
  }
  out += "[cycle]\n";
  for (int i = 0; i < seq.cycle_size(); ++i) {
    if (i > 0) out += "---\n";
    out += print_substitution(seq.cycle()[static_cast<size_t>(i)]);
  }
  return out;
}

}  // namespace expanse
