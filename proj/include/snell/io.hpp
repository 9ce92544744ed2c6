#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snell/hecke.hpp"
#include "snell/labeling.hpp"
#include "snell/poset.hpp"

namespace snell {

// Poset document:
//   {"elements": ["a", ...],            // order defines the element index
//    "covers":   [["a","b"], ...],
//    "labels":   {"a|b": 1, ...}}        // optional, keys "<lower>|<upper>"
// Writers emit elements sorted, covers sorted, labels for every cover;
// parse(write(p)) reproduces the same named poset.
struct PosetDocument {
  Poset poset;
  std::optional<EdgeLabeling> labeling;
};

PosetDocument poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p, const EdgeLabeling* lab = nullptr);

// Action document:
//   {"poset": {...} | "path.json",      // embedded document or file path
//    "chains": [["a","b","d","f"], ...],  // all maximal chains, element names
//    "U": [[...], ...]}                  // row i-1 = U_i, 0-based chain indices
ChainAction action_from_json(const nlohmann::json& j);
nlohmann::json action_to_json(const ChainAction& a);

// "-" means stdin/stdout.
nlohmann::json read_json(const std::string& path);
void write_json(const std::string& path, const nlohmann::json& j);

std::string read_stream_text(std::istream& in);

}  // namespace snell
