#ifndef TOPODYN_JSON_IO_HPP
#define TOPODYN_JSON_IO_HPP

#include <string>

#include "topodyn/actions.hpp"
#include "topodyn/json_fwd.hpp"

namespace topodyn {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"points": n, "opens": [[...], ...]} or {"points": n, "min_open": [[...], ...]}
// (exactly one of the two keys).
FinSpace space_from_json(const nlohmann::json& j);
nlohmann::ordered_json space_to_json(const FinSpace& x);

// {"relation": [[x, y], ...]} or {"partition": [[members], ...]}
Relation relation_from_json(const nlohmann::json& j, int n);
nlohmann::ordered_json relation_to_json(const Relation& e);

// {"generators": [[image of 0, ...], ...], "group": "Z" | "finite"}
ActionSpec action_from_json(const nlohmann::json& j, FinSpace space);

// Full check-input document: {"space": ..., "relation"|"partition"|"generators": ...}.
struct CheckInput {
    FinSpace space;
    Relation rel;
    std::optional<ActionSpec> action;
};
CheckInput check_input_from_json(const nlohmann::json& j);

}  // namespace topodyn

#endif
