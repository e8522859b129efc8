#include "posetsys/corpus.hpp"

#include <map>
#include <utility>

#include "posetsys/errors.hpp"

namespace posetsys {
namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& corpus_files();
}  // namespace detail

namespace {

const std::map<std::string_view, std::string_view> kDescriptions = {
    {"fourNodePoset", "four-node poset 1⪰2, 3⪰2, 2⪰4 with its derived sets"},
    {"posetP1", "coordinator with two followers"},
    {"posetP2", "out-tree on six nodes"},
    {"posetP3", "dual of P1, an in-tree"},
    {"posetP4", "in-tree on four nodes"},
    {"posetP5", "neither in- nor out-ultra transitive"},
    {"posetP6", "complete order 1⪰2⪰3"},
    {"exLargeEx", "uncontrollable system over P4 with strict reachability chain"},
    {"twoNodeHat", "two-node system where R̂ is not contained in R"},
    {"chainPlacement", "system over P6 that is not weakly locally controllable"},
    {"exObsEx", "unobservable system over P4 with N° = Ñ"},
    {"exNonOpt", "two-node system whose structured reduction is not minimal"},
    {"exDualMinimal", "same system, reduced to a minimal realisation on the dual side"},
};

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& [name, json] : detail::corpus_files()) {
      auto it = kDescriptions.find(name);
      out.push_back({std::string(name),
                     it == kDescriptions.end() ? std::string() : std::string(it->second),
                     std::string(json)});
    }
    return out;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const CorpusEntry& e : corpus()) {
    if (e.name == name) return e;
  }
  throw IoError("no corpus entry named \"" + std::string(name) + "\"");
}

}  // namespace posetsys
