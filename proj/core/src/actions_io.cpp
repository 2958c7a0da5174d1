#include "fgt/actions_io.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fgt/errors.hpp"

namespace fgt {

namespace {

nlohmann::json parse_json(std::string_view text, const char* what) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError(std::string("malformed JSON for ") + what, 0);
  }
  return doc;
}

std::vector<std::uint32_t> image_list(const nlohmann::json& node) {
  if (!node.is_array()) throw Error("permutation must be a JSON array");
  std::vector<std::uint32_t> images;
  images.reserve(node.size());
  for (const auto& entry : node) {
    if (!entry.is_number_unsigned()) {
      throw Error("permutation entries must be nonnegative integers");
    }
    images.push_back(entry.get<std::uint32_t>());
  }
  return images;
}

}  // namespace

std::string to_json_string(const Permutation& p) {
  nlohmann::json list = nlohmann::json::array();
  for (std::uint32_t image : p.images()) list.push_back(image);
  return list.dump();
}

Permutation permutation_from_json(std::string_view text) {
  return Permutation(image_list(parse_json(text, "permutation")));
}

std::string to_json_string(const FiniteAction& action) {
  nlohmann::ordered_json doc;
  doc["degree"] = action.degree;
  auto& gens = doc["generators"] = nlohmann::ordered_json::object();
  for (const auto& [name, perm] : action.generators) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (std::uint32_t image : perm.images()) list.push_back(image);
    gens[name] = std::move(list);
  }
  return doc.dump(2) + "\n";
}

FiniteAction finite_action_from_json(std::string_view text) {
  nlohmann::json doc = parse_json(text, "finite action");
  if (!doc.is_object() || !doc.contains("degree") ||
      !doc.contains("generators")) {
    throw Error("finite action needs \"degree\" and \"generators\" fields");
  }
  if (!doc["degree"].is_number_unsigned()) {
    throw Error("finite action degree must be a nonnegative integer");
  }
  FiniteAction action;
  action.degree = doc["degree"].get<std::uint32_t>();
  const auto& gens = doc["generators"];
  if (!gens.is_object()) throw Error("generators must be a JSON object");
  for (const auto& [name, node] : gens.items()) {
    Permutation perm(image_list(node));
    if (perm.degree() != action.degree) {
      throw Error("generator \"" + name + "\" degree mismatch");
    }
    action.generators.emplace(name, std::move(perm));
  }
  return action;
}

}  // namespace fgt
