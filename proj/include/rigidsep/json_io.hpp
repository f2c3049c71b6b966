#pragma once

#include <string>

#include <json.hpp>

#include "rigidsep/relations.hpp"

namespace rigidsep {

/** Family interchange format:
 *    {"m": int, "kind": "linear"|"tournament"|"relation", "members": [...]}
 *  Linear members are 1-based one-line integer arrays; tournament and
 *  relation members are row-major m x m 0/1 matrices.
 */
nlohmann::json family_to_json(const Family& fam);

/** Parse and validate; throws std::invalid_argument on schema or
 *  structural violations (bad permutation, non-tournament matrix,
 *  mixed diagonal, ...).
 */
Family family_from_json(const nlohmann::json& j);

Family load_family(const std::string& path);
void save_family(const Family& fam, const std::string& path);

}  // namespace rigidsep
