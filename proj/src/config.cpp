#include "qwcf/config.hpp"

#include "json.hpp"

#include <algorithm>
#include <initializer_list>
#include <string_view>

namespace qwcf {
namespace {

using Json = nlohmann::ordered_json;

void expect_keys(const Json& obj, const char* where,
                 std::initializer_list<std::string_view> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
}

double as_number(const Json& v, const char* key) {
    if (!v.is_number())
        throw ConfigError(std::string("'") + key + "' must be a number");
    return v.get<double>();
}

double as_unit(const Json& v, const char* key) {
    const double d = as_number(v, key);
    if (!(d >= 0.0 && d <= 1.0))
        throw ConfigError(std::string("'") + key + "' must lie in [0, 1]");
    return d;
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config root must be a JSON object");
    expect_keys(j, "config",
                {"x", "y", "z", "losses", "link", "detector_eff",
                 "distances_km", "truncation", "format", "out", "oracle"});

    RunConfig c;
    if (j.contains("x")) {
        c.x = as_number(j["x"], "x");
        if (!(c.x > 0.0 && c.x < 1.0))
            throw ConfigError("'x' must lie strictly inside (0, 1)");
    }
    if (j.contains("y")) c.y = as_unit(j["y"], "y");
    if (j.contains("z")) c.z = as_unit(j["z"], "z");

    if (j.contains("losses")) {
        const Json& l = j["losses"];
        if (!l.is_object())
            throw ConfigError("'losses' must be an object");
        expect_keys(l, "'losses'",
                    {"eta_t", "eta_f_a", "eta_f_b", "eta_d_a", "eta_d_b", "p_dc"});
        if (l.contains("eta_t")) c.losses.eta_t = as_unit(l["eta_t"], "eta_t");
        if (l.contains("eta_f_a")) c.losses.eta_f_a = as_unit(l["eta_f_a"], "eta_f_a");
        if (l.contains("eta_f_b")) c.losses.eta_f_b = as_unit(l["eta_f_b"], "eta_f_b");
        if (l.contains("eta_d_a")) c.losses.eta_d_a = as_unit(l["eta_d_a"], "eta_d_a");
        if (l.contains("eta_d_b")) c.losses.eta_d_b = as_unit(l["eta_d_b"], "eta_d_b");
        if (l.contains("p_dc")) {
            c.losses.p_dc = as_unit(l["p_dc"], "p_dc");
            if (c.losses.p_dc >= 1.0)
                throw ConfigError("'p_dc' must lie in [0, 1)");
        }
    }

    if (j.contains("link")) {
        const Json& l = j["link"];
        if (!l.is_object())
            throw ConfigError("'link' must be an object");
        expect_keys(l, "'link'",
                    {"distance_km", "attenuation_db_per_km", "switch_time_ns",
                     "group_velocity_km_per_s"});
        if (l.contains("distance_km")) {
            c.link.distance_km = as_number(l["distance_km"], "distance_km");
            if (c.link.distance_km < 0.0)
                throw ConfigError("'distance_km' must be nonnegative");
        }
        if (l.contains("attenuation_db_per_km")) {
            c.link.attenuation_db_per_km =
                as_number(l["attenuation_db_per_km"], "attenuation_db_per_km");
            if (c.link.attenuation_db_per_km < 0.0)
                throw ConfigError("'attenuation_db_per_km' must be nonnegative");
        }
        if (l.contains("switch_time_ns")) {
            c.link.switch_time_ns = as_number(l["switch_time_ns"], "switch_time_ns");
            if (c.link.switch_time_ns < 0.0)
                throw ConfigError("'switch_time_ns' must be nonnegative");
        }
        if (l.contains("group_velocity_km_per_s")) {
            c.link.group_velocity_km_per_s =
                as_number(l["group_velocity_km_per_s"], "group_velocity_km_per_s");
            if (c.link.group_velocity_km_per_s <= 0.0)
                throw ConfigError("'group_velocity_km_per_s' must be positive");
        }
    }

    if (j.contains("detector_eff"))
        c.detector_eff = as_unit(j["detector_eff"], "detector_eff");

    if (j.contains("distances_km")) {
        const Json& d = j["distances_km"];
        if (!d.is_array())
            throw ConfigError("'distances_km' must be an array of numbers");
        c.distances_km.clear();
        for (const Json& v : d)
            c.distances_km.push_back(as_number(v, "distances_km entry"));
        for (std::size_t i = 1; i < c.distances_km.size(); ++i)
            if (!(c.distances_km[i] > c.distances_km[i - 1]))
                throw ConfigError("'distances_km' must be strictly ascending");
        if (!c.distances_km.empty() && c.distances_km.front() < 0.0)
            throw ConfigError("'distances_km' must be nonnegative");
    }

    if (j.contains("truncation")) {
        if (!j["truncation"].is_number_integer())
            throw ConfigError("'truncation' must be an integer");
        c.truncation = j["truncation"].get<int>();
        if (c.truncation < 1)
            throw ConfigError("'truncation' must be at least 1");
    }

    if (j.contains("format")) {
        if (!j["format"].is_string())
            throw ConfigError("'format' must be a string");
        c.format = j["format"].get<std::string>();
        if (c.format != "csv" && c.format != "json" && c.format != "table")
            throw ConfigError("'format' must be one of csv, json, table");
    }

    if (j.contains("out")) {
        if (!j["out"].is_string())
            throw ConfigError("'out' must be a string");
        c.out = j["out"].get<std::string>();
        if (c.out.empty())
            throw ConfigError("'out' must be non-empty (\"-\" for stdout)");
    }

    if (j.contains("oracle")) {
        if (!j["oracle"].is_boolean())
            throw ConfigError("'oracle' must be a boolean");
        c.oracle = j["oracle"].get<bool>();
    }

    return c;
}

std::string serialize_config(const RunConfig& c) {
    Json j;
    j["x"] = c.x;
    if (c.y) j["y"] = *c.y;
    if (c.z) j["z"] = *c.z;
    j["losses"] = {{"eta_t", c.losses.eta_t},     {"eta_f_a", c.losses.eta_f_a},
                   {"eta_f_b", c.losses.eta_f_b}, {"eta_d_a", c.losses.eta_d_a},
                   {"eta_d_b", c.losses.eta_d_b}, {"p_dc", c.losses.p_dc}};
    j["link"] = {{"distance_km", c.link.distance_km},
                 {"attenuation_db_per_km", c.link.attenuation_db_per_km},
                 {"switch_time_ns", c.link.switch_time_ns},
                 {"group_velocity_km_per_s", c.link.group_velocity_km_per_s}};
    j["detector_eff"] = c.detector_eff;
    j["distances_km"] = c.distances_km;
    j["truncation"] = c.truncation;
    j["format"] = c.format;
    j["out"] = c.out;
    j["oracle"] = c.oracle;
    return j.dump(2) + "\n";
}

} // namespace qwcf
