#pragma once

#include <string>
#include <string_view>

#include "fgt/actions.hpp"

namespace fgt {

// Permutation <-> JSON integer list, e.g. [1, 2, 0].
std::string to_json_string(const Permutation& p);
Permutation permutation_from_json(std::string_view text);

// FiniteAction <-> {"degree": n, "generators": {"name": [...], ...}}.
std::string to_json_string(const FiniteAction& action);
FiniteAction finite_action_from_json(std::string_view text);

}  // namespace fgt
