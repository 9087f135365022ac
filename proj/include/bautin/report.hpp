#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace bautin {

inline constexpr const char* kToolVersion = "0.1.0";

// Deterministic run record: no timestamps or timing fields, so identical
// inputs and seed produce byte-identical serializations.
struct RunReport {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> seed;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        if (seed) j["seed"] = *seed;
        j["tool_version"] = kToolVersion;
        return j;
    }
};

}  // namespace bautin
