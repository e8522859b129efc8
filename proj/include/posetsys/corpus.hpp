#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace posetsys {

// Example systems compiled into the library; the same files ship in corpus/.
struct CorpusEntry {
  std::string name;
  std::string description;
  std::string json;
};

const std::vector<CorpusEntry>& corpus();

// IoError if there is no entry with this name.
const CorpusEntry& corpus_entry(std::string_view name);

}  // namespace posetsys
