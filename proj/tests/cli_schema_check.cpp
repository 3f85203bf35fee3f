// Runs the CLI binary and validates its JSON output against the schemas
// shipped in schemas/. Covers required keys, primitive types, and enum
// membership (the subset of JSON Schema those files use).

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

using nlohmann::json;

namespace {

std::string run(const std::string& cmd) {
    std::array<char, 4096> buf{};
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe)
        throw std::runtime_error("popen failed: " + cmd);
    while (fgets(buf.data(), buf.size(), pipe.get()))
        out += buf.data();
    return out;
}

bool type_matches(const json& value, const std::string& type) {
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "array") return value.is_array();
    if (type == "object") return value.is_object();
    return false;
}

bool validate(const json& value, const json& schema, std::string& why);

bool validate_object(const json& value, const json& schema, std::string& why) {
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) {
                why = "missing required key " + key.get<std::string>();
                return false;
            }
    if (schema.contains("properties"))
        for (auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !validate(value[key], sub, why)) {
                why = "at key " + key + ": " + why;
                return false;
            }
    return true;
}

bool validate(const json& value, const json& schema, std::string& why) {
    if (schema.contains("type") && !type_matches(value, schema["type"])) {
        why = "expected type " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"])
            if (e == value) found = true;
        if (!found) {
            why = "value not in enum";
            return false;
        }
    }
    if (value.is_object())
        return validate_object(value, schema, why);
    if (value.is_array() && schema.contains("items")) {
        if (schema.contains("minItems") &&
            value.size() < schema["minItems"].get<std::size_t>()) {
            why = "too few items";
            return false;
        }
        if (schema.contains("maxItems") &&
            value.size() > schema["maxItems"].get<std::size_t>()) {
            why = "too many items";
            return false;
        }
        for (const auto& item : value)
            if (!validate(item, schema["items"], why))
                return false;
    }
    return true;
}

json load_schema(const std::string& dir, const std::string& name) {
    std::ifstream f(dir + "/" + name);
    if (!f)
        throw std::runtime_error("cannot read schema " + name);
    return json::parse(f);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: cli_schema_check <cli-binary> <schema-dir>\n";
        return 2;
    }
    std::string cli = argv[1];
    std::string dir = argv[2];

    struct Case {
        std::string cmd;
        std::string schema;
    };
    std::vector<Case> cases = {
        {"stats 7", "stats.schema.json"},
        {"exact 5 5 --method oracle", "solve_result.schema.json"},
        {"exact 6 10", "solve_result.schema.json"},
        {"heuristic 8 20 --restarts 3 --seed 5", "solve_result.schema.json"},
        {"alpha 6", "alpha.schema.json"},
        {"construct 10 20", "construct.schema.json"},
        {"bounds 20 570", "bounds.schema.json"},
        {"crossover", "crossover.schema.json"},
    };

    int failures = 0;
    for (const Case& c : cases) {
        std::string raw = run(cli + " " + c.cmd);
        json value;
        try {
            value = json::parse(raw);
        } catch (const std::exception& e) {
            std::cout << "[FAIL] " << c.cmd << ": output is not JSON (" << e.what()
                      << ")\n";
            ++failures;
            continue;
        }
        json schema = load_schema(dir, c.schema);
        std::string why;
        if (validate(value, schema, why)) {
            std::cout << "[PASS] " << c.cmd << " matches " << c.schema << "\n";
        } else {
            std::cout << "[FAIL] " << c.cmd << " vs " << c.schema << ": " << why << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
