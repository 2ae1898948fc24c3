#ifndef SGLAB_SPEC_IO_HPP
#define SGLAB_SPEC_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "sglab/group.hpp"

namespace sglab {

// "(1 2 3)(4 5), (1 2)" -> two generators. "()" is the identity.
std::vector<CycleWord> parse_generator_list(const std::string& text);

// `name=<string>; degree=<n>; gens=(a b c)(d e), (f g), ...`
GroupSpec parse_group_spec_text(const std::string& text);

// {"name": ..., "degree": ..., "generators": [[[1,2],[3,4]], ...]}
GroupSpec parse_group_spec_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupSpec& spec);
std::string to_text(const GroupSpec& spec);

// Accepts either form; JSON is recognized by a leading '{'.
GroupSpec parse_group_spec(const std::string& text);

}  // namespace sglab

#endif
