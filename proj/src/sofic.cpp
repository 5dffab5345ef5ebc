/* sofic.cpp -- labeled-graph shift presentations and survivor-set analysis */

#include "expanse/sofic.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "expanse/errors.hpp"

namespace expanse {

namespace {

// Essential part: vertices lying on bi-infinite walks, i.e. surviving the
// iterated removal of vertices without outgoing or without incoming edges.
std::vector<bool> essential_mask(int n, const std::vector<SoficPresentation::Edge>& edges) {
  std::vector<bool> alive(static_cast<size_t>(n), true);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<bool> has_out(static_cast<size_t>(n), false), has_in(static_cast<size_t>(n), false);
    for (const auto& e : edges)
      if (alive[static_cast<size_t>(e.src)] && alive[static_cast<size_t>(e.dst)]) {
        has_out[static_cast<size_t>(e.src)] = true;
        has_in[static_cast<size_t>(e.dst)] = true;
      }
    for (int v = 0; v < n; ++v)
      if (alive[static_cast<size_t>(v)] && (!has_out[static_cast<size_t>(v)] || !has_in[static_cast<size_t>(v)])) {
        alive[static_cast<size_t>(v)] = false;
        changed = true;
      }
  }
  return alive;
}

}  // namespace

SoficPresentation::SoficPresentation(std::vector<std::string> vertices, AlphabetRef alphabet,
                                     std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("presentation requires an alphabet");
  int n = static_cast<int>(vertices.size());
  {
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (static_cast<int>(names.size()) != n)
      throw std::invalid_argument("duplicate vertex names");
  }
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.label < 0 || e.label >= alphabet_->size())
      throw std::invalid_argument("edge label out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<bool> alive = essential_mask(n, edges);
  std::vector<int> remap(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (alive[static_cast<size_t>(v)]) {
      remap[static_cast<size_t>(v)] = static_cast<int>(vertices_.size());
      vertices_.push_back(vertices[static_cast<size_t>(v)]);
    } else {
      trimmed_away_.push_back(vertices[static_cast<size_t>(v)]);
    }
  }
  for (const auto& e : edges)
    if (alive[static_cast<size_t>(e.src)] && alive[static_cast<size_t>(e.dst)])
      edges_.push_back({remap[static_cast<size_t>(e.src)], e.label, remap[static_cast<size_t>(e.dst)]});
}

bool SoficPresentation::is_deterministic() const {
  std::set<std::pair<int, int32_t>> seen;
  for (const auto& e : edges_)
    if (!seen.emplace(e.src, e.label).second) return false;
  return true;
}

SoficPresentation parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::map<std::string, int> vertex_index;
  std::vector<std::string> labels;
  std::set<std::string> label_seen;
  struct RawEdge {
    std::string src, label, dst;
  };
  std::vector<RawEdge> raw;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string src, label, dst, extra;
    if (!(ls >> src)) continue;
    if (!(ls >> label >> dst) || (ls >> extra))
      throw std::invalid_argument("graph line needs exactly '<src> <label> <dst>': " + line);
    for (const std::string* name : {&src, &dst})
      if (!vertex_index.count(*name)) {
        vertex_index[*name] = static_cast<int>(vertices.size());
        vertices.push_back(*name);
      }
    if (label_seen.insert(label).second) labels.push_back(label);
    raw.push_back({src, label, dst});
  }
  if (raw.empty()) throw std::invalid_argument("graph file has no edges");

  bool single_chars = true;
  for (const std::string& l : labels) single_chars &= l.size() == 1;
  if (single_chars) std::sort(labels.begin(), labels.end());
  AlphabetRef alphabet = Alphabet::make(labels);

  std::vector<SoficPresentation::Edge> edges;
  for (const RawEdge& e : raw)
    edges.push_back({vertex_index[e.src], *alphabet->index(e.label), vertex_index[e.dst]});
  return SoficPresentation(std::move(vertices), alphabet, std::move(edges));
}

std::string print_graph(const SoficPresentation& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += g.vertices()[static_cast<size_t>(e.src)];
    out += ' ';
    out += g.alphabet()->letter(e.label);
    out += ' ';
    out += g.vertices()[static_cast<size_t>(e.dst)];
    out += '\n';
  }
  return out;
}

SoficPresentation determinize(const SoficPresentation& g) {
  const int n = g.vertex_count();
  if (n == 0) return g;
  if (n > 62) throw budget_error("determinization limited to 62 vertices");

  auto subset_name = [&](uint64_t mask) {
    std::string name = "{";
    bool first = true;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) {
        if (!first) name += ',';
        name += g.vertices()[static_cast<size_t>(v)];
        first = false;
      }
    return name + "}";
  };

  // Forward images per letter.
  std::vector<std::vector<uint64_t>> image(static_cast<size_t>(g.alphabet()->size()),
                                           std::vector<uint64_t>(static_cast<size_t>(n), 0));
  for (const auto& e : g.edges())
    image[static_cast<size_t>(e.label)][static_cast<size_t>(e.src)] |= uint64_t{1} << e.dst;

  uint64_t start = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  std::map<uint64_t, int> index{{start, 0}};
  std::vector<uint64_t> order{start};
  std::vector<SoficPresentation::Edge> edges;
  std::queue<uint64_t> queue;
  queue.push(start);
  while (!queue.empty()) {
    uint64_t s = queue.front();
    queue.pop();
    for (int32_t a = 0; a < g.alphabet()->size(); ++a) {
      uint64_t t = 0;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1) t |= image[static_cast<size_t>(a)][static_cast<size_t>(v)];
      if (t == 0) continue;
      auto [it, inserted] = index.emplace(t, static_cast<int>(order.size()));
      if (inserted) {
        order.push_back(t);
        queue.push(t);
      }
      edges.push_back({index[s], a, it->second});
    }
  }
  std::vector<std::string> names;
  names.reserve(order.size());
  for (uint64_t mask : order) names.push_back(subset_name(mask));
  return SoficPresentation(std::move(names), g.alphabet(), std::move(edges));
}

SoficPresentation sft_from_forbidden(const AlphabetRef& alphabet,
                                     const std::vector<Word>& forbidden) {
  int max_len = 1;
  for (const Word& w : forbidden) {
    if (w.empty()) throw std::invalid_argument("forbidden words must be non-empty");
    max_len = std::max(max_len, w.size());
  }
  const int memory = max_len - 1;

  auto blocked = [&](const Word& w) {
    for (const Word& f : forbidden)
      if (!occurrences(f, w).empty()) return true;
    return false;
  };

  // Vertices: all memory-length words; edges append one letter.
  std::vector<Word> vertex_words;
  std::vector<int32_t> cur(static_cast<size_t>(memory), 0);
  while (true) {
    vertex_words.emplace_back(alphabet, cur);
    int i = memory - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == alphabet->size() - 1) {
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  std::map<Word, int> vid;
  std::vector<std::string> names;
  for (const Word& w : vertex_words) {
    vid[w] = static_cast<int>(names.size());
    names.push_back(memory == 0 ? "e" : w.str());
  }
  std::vector<SoficPresentation::Edge> edges;
  for (const Word& u : vertex_words)
    for (int32_t a = 0; a < alphabet->size(); ++a) {
      Word ua = u + Word(alphabet, {a});
      if (blocked(ua)) continue;
      Word v = ua.suffix(memory);
      edges.push_back({vid[u], a, vid[v]});
    }
  return SoficPresentation(std::move(names), alphabet, std::move(edges));
}

namespace {

// Deterministic transition table of a presentation; -1 for missing edges.
std::vector<std::vector<int>> transition_table(const SoficPresentation& g) {
  std::vector<std::vector<int>> delta(
      static_cast<size_t>(g.vertex_count()),
      std::vector<int>(static_cast<size_t>(g.alphabet()->size()), -1));
  for (const auto& e : g.edges()) {
    if (delta[static_cast<size_t>(e.src)][static_cast<size_t>(e.label)] != -1)
      throw std::logic_error("transition table needs a deterministic presentation");
    delta[static_cast<size_t>(e.src)][static_cast<size_t>(e.label)] = e.dst;
  }
  return delta;
}

uint64_t domain_mask(const std::vector<int>& f) {
  uint64_t mask = 0;
  for (size_t v = 0; v < f.size(); ++v)
    if (f[v] != -1) mask |= uint64_t{1} << v;
  return mask;
}

}  // namespace

SurvivorFamily predecessor_set_family(const SoficPresentation& g, int state_budget) {
  SoficPresentation det = determinize(g);
  SurvivorFamily family{det, {}, {}};
  const int n = det.vertex_count();
  if (n == 0) return family;
  const int letters = det.alphabet()->size();
  std::vector<std::vector<int>> delta = transition_table(det);

  // Reachable partial transition maps, from the identity, composing one
  // letter at a time on the output side.
  std::map<std::vector<int>, int> map_index;
  std::vector<std::vector<int>> maps;
  std::vector<std::vector<int>> succ;  // map id -> per-letter successor (-1 none)
  std::vector<int> identity(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) identity[static_cast<size_t>(v)] = v;
  map_index[identity] = 0;
  maps.push_back(identity);
  succ.emplace_back(static_cast<size_t>(letters), -1);
  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop();
    for (int32_t a = 0; a < letters; ++a) {
      std::vector<int> next(static_cast<size_t>(n), -1);
      bool nonempty = false;
      for (int v = 0; v < n; ++v) {
        int mid = maps[static_cast<size_t>(id)][static_cast<size_t>(v)];
        if (mid == -1) continue;
        int to = delta[static_cast<size_t>(mid)][static_cast<size_t>(a)];
        next[static_cast<size_t>(v)] = to;
        nonempty |= to != -1;
      }
      if (!nonempty) continue;
      auto [it, inserted] = map_index.emplace(next, static_cast<int>(maps.size()));
      if (inserted) {
        if (static_cast<int>(maps.size()) >= state_budget)
          throw budget_error("survivor family exceeded the partial-map budget");
        maps.push_back(next);
        succ.emplace_back(static_cast<size_t>(letters), -1);
        queue.push(it->second);
      }
      succ[static_cast<size_t>(id)][static_cast<size_t>(a)] = it->second;
    }
  }

  // A domain is realized iff some map with that domain reaches, through maps
  // of the same domain, a cycle of such maps.  Found by trimming the domain-
  // class subgraph to vertices with a path to a cycle (eventual outgoing
  // edges forever == the class subgraph's essential-forward part).
  std::map<uint64_t, std::vector<int>> classes;
  for (size_t id = 0; id < maps.size(); ++id)
    classes[domain_mask(maps[id])].push_back(static_cast<int>(id));

  std::set<uint64_t> realized;
  for (const auto& [mask, ids] : classes) {
    // Iteratively drop members with no in-class successor; anything left can
    // walk forever inside the class.
    std::set<int> alive(ids.begin(), ids.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = alive.begin(); it != alive.end();) {
        bool has_succ = false;
        for (int32_t a = 0; a < letters && !has_succ; ++a) {
          int to = succ[static_cast<size_t>(*it)][static_cast<size_t>(a)];
          has_succ = to != -1 && alive.count(to) > 0;
        }
        if (!has_succ) {
          it = alive.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    if (!alive.empty()) realized.insert(mask);
  }

  for (uint64_t mask : realized) {
    std::vector<int> member;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) member.push_back(v);
    family.members.push_back(std::move(member));
  }
  std::sort(family.members.begin(), family.members.end());

  // Backward step on members: predecessors under one more letter on the left.
  std::map<std::vector<int>, int> member_index;
  for (size_t i = 0; i < family.members.size(); ++i)
    member_index[family.members[i]] = static_cast<int>(i);
  for (size_t i = 0; i < family.members.size(); ++i) {
    std::set<int> in_member(family.members[i].begin(), family.members[i].end());
    for (int32_t a = 0; a < letters; ++a) {
      std::vector<int> pre;
      for (int v = 0; v < n; ++v) {
        int to = delta[static_cast<size_t>(v)][static_cast<size_t>(a)];
        if (to != -1 && in_member.count(to)) pre.push_back(v);
      }
      int target = -1;
      if (!pre.empty()) {
        auto it = member_index.find(pre);
        if (it == member_index.end())
          throw std::logic_error("family not closed under backward steps");
        target = it->second;
      }
      family.step[{static_cast<int>(i), a}] = target;
    }
  }
  return family;
}

bool is_finite_shift(const SoficPresentation& g) {
  SoficPresentation det = determinize(g);
  if (det.vertex_count() == 0) return true;
  std::vector<int> out(static_cast<size_t>(det.vertex_count()), 0);
  std::vector<int> in(static_cast<size_t>(det.vertex_count()), 0);
  for (const auto& e : det.edges()) {
    ++out[static_cast<size_t>(e.src)];
    ++in[static_cast<size_t>(e.dst)];
  }
  for (int v = 0; v < det.vertex_count(); ++v)
    if (out[static_cast<size_t>(v)] != 1 || in[static_cast<size_t>(v)] != 1) return false;
  return true;
}

LanguageSource sofic_language(const SoficPresentation& g, int budget) {
  SoficPresentation det = determinize(g);
  auto compute = [det](int r) {
    std::set<Word> out;
    if (det.vertex_count() == 0) return out;
    std::vector<std::vector<int>> delta = transition_table(det);
    const int letters = det.alphabet()->size();
    // DFS over (letter prefix, set of reachable end states).
    struct Frame {
      std::vector<int32_t> prefix;
      std::vector<int> states;
    };
    std::vector<int> all(static_cast<size_t>(det.vertex_count()));
    for (int v = 0; v < det.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
    std::vector<Frame> stack{{{}, all}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (static_cast<int>(f.prefix.size()) == r) {
        out.insert(Word(det.alphabet(), f.prefix));
        continue;
      }
      for (int32_t a = 0; a < letters; ++a) {
        std::vector<int> next;
        for (int v : f.states) {
          int to = delta[static_cast<size_t>(v)][static_cast<size_t>(a)];
          if (to != -1) next.push_back(to);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) continue;
        Frame g2;
        g2.prefix = f.prefix;
        g2.prefix.push_back(a);
        g2.states = std::move(next);
        stack.push_back(std::move(g2));
      }
    }
    return out;
  };
  return LanguageSource("sofic", det.alphabet(), budget, compute);
}

SoficProfile sofic_degree_profile(const SoficPresentation& g, int ell_max, uint64_t cap) {
  if (ell_max < 1) throw std::invalid_argument("ell_max must be >= 1");
  SurvivorFamily family = predecessor_set_family(g);
  SoficProfile profile;
  profile.max_by_ell.assign(static_cast<size_t>(ell_max), 0);
  if (family.members.empty()) return profile;

  const SoficPresentation& det = family.graph;
  const int n = det.vertex_count();
  const int letters = det.alphabet()->size();
  std::vector<std::vector<int>> delta = transition_table(det);

  // Backward image per letter: pre[a][mask] computed on the fly.
  auto backward = [&](uint64_t mask, int32_t a) {
    uint64_t pre = 0;
    for (int v = 0; v < n; ++v) {
      int to = delta[static_cast<size_t>(v)][static_cast<size_t>(a)];
      if (to != -1 && (mask >> to & 1)) pre |= uint64_t{1} << v;
    }
    return pre;
  };
  auto sat_add = [&](uint64_t x, uint64_t y) { return x >= cap - std::min(cap, y) ? cap : x + y; };

  for (const auto& member : family.members) {
    uint64_t start = 0;
    for (int v : member) start |= uint64_t{1} << v;
    // counts[U] = number of distinct length-k words w with
    // {q : delta(q, w) in S} = U; prepending letters steps k -> k+1.
    std::map<uint64_t, uint64_t> counts{{start, 1}};
    for (int ell = 1; ell <= ell_max; ++ell) {
      std::map<uint64_t, uint64_t> next;
      for (const auto& [mask, c] : counts)
        for (int32_t a = 0; a < letters; ++a) {
          uint64_t pre = backward(mask, a);
          if (pre == 0) continue;
          auto [it, inserted] = next.emplace(pre, c);
          if (!inserted) it->second = sat_add(it->second, c);
        }
      uint64_t total = 0;
      for (const auto& [mask, c] : next) total = sat_add(total, c);
      if (total >= cap) profile.capped = true;
      profile.max_by_ell[static_cast<size_t>(ell - 1)] =
          std::max(profile.max_by_ell[static_cast<size_t>(ell - 1)], total);
      counts = std::move(next);
    }
  }
  profile.bounded_tail = true;
  for (int ell = (ell_max + 1) / 2; ell <= ell_max; ++ell)
    if (profile.max_by_ell[static_cast<size_t>(ell - 1)] != profile.max_by_ell.back())
      profile.bounded_tail = false;
  return profile;
}

}  // namespace expanse
