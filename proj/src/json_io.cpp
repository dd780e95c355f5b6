#include "topodyn/json_io.hpp"

namespace topodyn {

namespace {

std::vector<int> int_list(const nlohmann::json& j, const char* key) {
    if (!j.is_array()) throw InputError(std::string("expected an array under '") + key + "'");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError(std::string("non-integer entry under '") + key + "'");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

FinSpace space_from_json(const nlohmann::json& j) {
    if (!j.contains("points")) throw InputError("missing key 'points'");
    const int n = j.at("points").get<int>();
    if (n < 0) throw InputError("'points' must be non-negative");
    const bool has_opens = j.contains("opens");
    const bool has_min = j.contains("min_open");
    if (has_opens == has_min)
        throw InputError("exactly one of 'opens' and 'min_open' must be present");
    if (has_opens) {
        std::vector<PointSet> opens;
        for (const auto& o : j.at("opens")) {
            auto ms = int_list(o, "opens");
            for (int m : ms)
                if (m < 0 || m >= n) throw InputError("point index out of range under 'opens'");
            opens.push_back(make_set(n, ms));
        }
        return build_space(n, opens);
    }
    std::vector<PointSet> rows;
    for (const auto& o : j.at("min_open")) {
        auto ms = int_list(o, "min_open");
        for (int m : ms)
            if (m < 0 || m >= n) throw InputError("point index out of range under 'min_open'");
        rows.push_back(make_set(n, ms));
    }
    if (static_cast<int>(rows.size()) != n)
        throw InputError("'min_open' must list one row per point");
    return FinSpace::from_min_open(std::move(rows));
}

nlohmann::ordered_json space_to_json(const FinSpace& x) {
    nlohmann::ordered_json j;
    j["points"] = x.n();
    j["min_open"] = nlohmann::ordered_json::array();
    for (int p = 0; p < x.n(); ++p) j["min_open"].push_back(members(x.min_open(p)));
    return j;
}

Relation relation_from_json(const nlohmann::json& j, int n) {
    const bool has_rel = j.contains("relation");
    const bool has_part = j.contains("partition");
    if (has_rel == has_part)
        throw InputError("exactly one of 'relation' and 'partition' must be present");
    if (has_rel) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& p : j.at("relation")) {
            auto xy = int_list(p, "relation");
            if (xy.size() != 2) throw InputError("entries under 'relation' must be pairs");
            pairs.emplace_back(xy[0], xy[1]);
        }
        try {
            return Relation::from_pairs(n, pairs);
        } catch (const DimensionMismatch& e) {
            throw InputError(std::string("'relation': ") + e.what());
        }
    }
    std::vector<std::vector<int>> classes;
    for (const auto& c : j.at("partition")) classes.push_back(int_list(c, "partition"));
    try {
        return Relation::from_partition(n, classes);
    } catch (const DimensionMismatch& e) {
        throw InputError(std::string("'partition': ") + e.what());
    }
}

nlohmann::ordered_json relation_to_json(const Relation& e) {
    nlohmann::ordered_json j;
    j["relation"] = nlohmann::ordered_json::array();
    for (auto [x, y] : e.pairs()) j["relation"].push_back({x, y});
    return j;
}

ActionSpec action_from_json(const nlohmann::json& j, FinSpace space) {
    ActionSpec a;
    a.space = std::move(space);
    if (!j.contains("generators")) throw InputError("missing key 'generators'");
    for (const auto& g : j.at("generators")) {
        auto images = int_list(g, "generators");
        if (static_cast<int>(images.size()) != a.space.n())
            throw InputError("'generators': generator arity does not match the space");
        a.generators.push_back(std::move(images));
    }
    std::string group = j.value("group", "Z");
    if (group == "Z")
        a.kind = GroupKind::Z;
    else if (group == "finite")
        a.kind = GroupKind::Finite;
    else
        throw InputError("'group' must be \"Z\" or \"finite\"");
    return a;
}

CheckInput check_input_from_json(const nlohmann::json& j) {
    if (!j.contains("space")) throw InputError("missing key 'space'");
    CheckInput in;
    in.space = space_from_json(j.at("space"));
    const bool has_gen = j.contains("generators");
    const bool has_rel = j.contains("relation") || j.contains("partition");
    if (has_gen == has_rel)
        throw InputError("provide exactly one of 'generators' and 'relation'/'partition'");
    if (has_gen) {
        in.action = action_from_json(j, in.space);
        try {
            in.rel = orbit_relation(*in.action);
        } catch (const InvalidGenerator& e) {
            throw InputError(std::string("'generators': ") + e.what());
        }
    } else {
        in.rel = relation_from_json(j, in.space.n());
    }
    return in;
}

}  // namespace topodyn
