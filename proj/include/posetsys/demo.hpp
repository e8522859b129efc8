#pragma once

#include <string>
#include <vector>

#include "posetsys/corpus.hpp"

namespace posetsys {

struct DemoCheck {
  std::string quantity;
  std::string published;
  std::string computed;
  bool match = false;
};

struct DemoResult {
  std::string name;
  std::string description;
  std::vector<DemoCheck> checks;
  bool passed() const;
};

// Recomputes every published quantity of a corpus entry.
DemoResult run_demo(const CorpusEntry& entry);

// One line per quantity: "ok" or "MISMATCH", published, computed.
std::string render_demo(const DemoResult& result);

}  // namespace posetsys
