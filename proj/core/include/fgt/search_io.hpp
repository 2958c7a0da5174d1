#pragma once

#include <span>
#include <string>

#include "fgt/search.hpp"

namespace fgt {

// JSON document {"status": ..., "results": [...]} with one object per
// result: {word, ell, fixed_mass "p/q", discarded_mass "p/q",
// lineage: [{parent, conjugator}, ...], wall_ms}. Words render in the
// CLI grammar; lineage parents are reconstructed from the seed so the
// whole derivation replays from the document alone.
std::string to_json_string(std::string_view status,
                           std::span<const SearchResult> results);

std::string to_json_string(const SearchOutcome& outcome);

}  // namespace fgt
