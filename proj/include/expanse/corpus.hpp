/* corpus.hpp -- bundled example inputs in their on-disk formats */

#pragma once

#include <string>
#include <vector>

namespace expanse {

struct CorpusEntry {
  std::string id;
  std::string kind;  // "substitution" | "directive" | "graph"
  std::string filename;
  std::string content;
  std::string description;
};

// The bundled examples, in a fixed order.
const std::vector<CorpusEntry>& corpus();

// Entry lookup by id; throws std::invalid_argument for unknown ids.
const CorpusEntry& corpus_entry(const std::string& id);

}  // namespace expanse
