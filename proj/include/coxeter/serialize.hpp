#pragma once

#include <json.hpp>

#include <string>

#include "coxeter/shadows.hpp"

namespace coxeter {

// {"coeffs": [[q_0, q_1, ...] per simple root], "approx": [...]}; q_i are
// exact rational strings for the powers of T = 2cos(pi/N).
nlohmann::json root_json(Group& g, int id);
nlohmann::json root_json(const Root& v);
// Parses root_json output back into a vector over the group's field.
Root root_from_json(Group& g, const nlohmann::json& j);

// Human-readable, e.g. "a_s + 2a_t" or "(1/2 + T)a_u".
std::string root_text(Group& g, int id);

nlohmann::json shadow_json(Group& g, const ShadowSet& X);

}  // namespace coxeter
