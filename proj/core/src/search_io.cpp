#include "fgt/search_io.hpp"

#include "json.hpp"

namespace fgt {

namespace {

nlohmann::ordered_json result_to_json(const SearchResult& r) {
  nlohmann::ordered_json lineage = nlohmann::ordered_json::array();
  Word parent = r.seed;
  for (const Word& h : r.conjugators) {
    lineage.push_back({{"parent", to_text(parent)},
                       {"conjugator", to_text(h)}});
    parent = commutator_step(parent, h, r.bracket);
  }
  return {{"word", to_text(r.word)},
          {"ell", r.estimate.ell},
          {"fixed_mass", r.estimate.fixed_fraction()},
          {"discarded_mass", r.estimate.discarded_fraction()},
          {"lineage", std::move(lineage)},
          {"wall_ms", r.wall_ms}};
}

}  // namespace

std::string to_json_string(std::string_view status,
                           std::span<const SearchResult> results) {
  nlohmann::ordered_json doc;
  doc["status"] = status;
  auto& list = doc["results"] = nlohmann::ordered_json::array();
  for (const SearchResult& r : results) list.push_back(result_to_json(r));
  return doc.dump(2) + "\n";
}

std::string to_json_string(const SearchOutcome& outcome) {
  return to_json_string(to_string(outcome.status), outcome.results);
}

}  // namespace fgt
