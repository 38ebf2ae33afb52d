#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <regex>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "a4l/errors.hpp"

namespace a4l {

struct SchemaViolation {
    std::string path;     // JSON pointer to the offending value
    std::string keyword;  // violated schema keyword
    std::string message;

    bool operator==(const SchemaViolation&) const = default;
};

struct SchemaViolationError : Error {
    explicit SchemaViolationError(std::vector<SchemaViolation> v)
        : Error(describe(v)), violations(std::move(v)) {}

    std::vector<SchemaViolation> violations;

    static std::string describe(const std::vector<SchemaViolation>& v) {
        std::string s = "schema violation";
        for (const auto& x : v) s += "; " + x.path + ": " + x.message;
        return s;
    }
};

struct MalformedJson : Error {
    using Error::Error;
};

// Validator for the draft-07 keyword subset the checked-in endpoint
// schemas use: type, required, properties, additionalProperties (bool),
// enum, pattern, minLength, maxLength, items (single schema), minItems,
// maxItems, minimum, maximum. Unknown keywords are ignored, matching
// reference validators. All violations are collected, not just the first.
class SchemaValidator {
public:
    explicit SchemaValidator(nlohmann::json schema) : schema_(std::move(schema)) {
        compile_patterns(schema_);
    }

    static SchemaValidator load_file(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot read schema file: " + path.string());
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("schema file " + path.string() + " is not valid JSON: " + e.what());
        }
        return SchemaValidator(std::move(j));
    }

    const nlohmann::json& schema() const { return schema_; }

    std::vector<SchemaViolation> validate(const nlohmann::json& doc) const {
        std::vector<SchemaViolation> out;
        check(schema_, doc, "", out);
        return out;
    }

    bool is_valid(const nlohmann::json& doc) const { return validate(doc).empty(); }

private:
    nlohmann::json schema_;
    // std::regex construction is costly; compile every "pattern" once.
    std::unordered_map<std::string, std::shared_ptr<std::regex>> patterns_;

    void compile_patterns(const nlohmann::json& node) {
        if (node.is_object()) {
            for (const auto& [key, value] : node.items()) {
                if (key == "pattern" && value.is_string()) {
                    const auto p = value.get<std::string>();
                    if (!patterns_.count(p))
                        patterns_.emplace(p, std::make_shared<std::regex>(
                                                 p, std::regex_constants::ECMAScript));
                } else {
                    compile_patterns(value);
                }
            }
        } else if (node.is_array()) {
            for (const auto& v : node) compile_patterns(v);
        }
    }

    static bool matches_type(const nlohmann::json& doc, const std::string& type) {
        if (type == "object") return doc.is_object();
        if (type == "array") return doc.is_array();
        if (type == "string") return doc.is_string();
        if (type == "boolean") return doc.is_boolean();
        if (type == "null") return doc.is_null();
        if (type == "number") return doc.is_number();
        if (type == "integer") {
            if (doc.is_number_integer() || doc.is_number_unsigned()) return true;
            // Draft 6+: a float with zero fractional part is an integer.
            if (doc.is_number_float()) {
                double d = doc.get<double>();
                return std::isfinite(d) && d == std::trunc(d);
            }
            return false;
        }
        return false;
    }

    void check(const nlohmann::json& schema, const nlohmann::json& doc, const std::string& path,
               std::vector<SchemaViolation>& out) const {
        if (!schema.is_object()) return;  // true/empty schema accepts anything

        if (auto it = schema.find("type"); it != schema.end()) {
            bool ok = false;
            if (it->is_string()) {
                ok = matches_type(doc, it->get<std::string>());
            } else if (it->is_array()) {
                for (const auto& t : *it)
                    if (matches_type(doc, t.get<std::string>())) ok = true;
            }
            if (!ok) {
                out.push_back({path, "type", "expected type " + it->dump()});
                return;  // nothing below applies to the wrong type
            }
        }

        if (auto it = schema.find("enum"); it != schema.end()) {
            bool ok = false;
            for (const auto& v : *it)
                if (v == doc) ok = true;
            if (!ok) out.push_back({path, "enum", "value not in " + it->dump()});
        }

        if (doc.is_string()) {
            const auto& s = doc.get_ref<const std::string&>();
            if (auto it = schema.find("minLength");
                it != schema.end() && s.size() < it->get<std::size_t>())
                out.push_back({path, "minLength", "shorter than " + it->dump()});
            if (auto it = schema.find("maxLength");
                it != schema.end() && s.size() > it->get<std::size_t>())
                out.push_back({path, "maxLength", "longer than " + it->dump()});
            if (auto it = schema.find("pattern"); it != schema.end()) {
                const auto& re = patterns_.at(it->get<std::string>());
                if (!std::regex_search(s, *re))
                    out.push_back({path, "pattern", "does not match " + it->dump()});
            }
        }

        if (doc.is_number()) {
            double d = doc.get<double>();
            if (auto it = schema.find("minimum"); it != schema.end() && d < it->get<double>())
                out.push_back({path, "minimum", "below " + it->dump()});
            if (auto it = schema.find("maximum"); it != schema.end() && d > it->get<double>())
                out.push_back({path, "maximum", "above " + it->dump()});
        }

        if (doc.is_object()) {
            if (auto it = schema.find("required"); it != schema.end()) {
                for (const auto& name : *it) {
                    const auto key = name.get<std::string>();
                    if (!doc.contains(key))
                        out.push_back({path + "/" + key, "required", "required property missing"});
                }
            }
            const auto props = schema.find("properties");
            for (const auto& [key, value] : doc.items()) {
                const nlohmann::json* sub = nullptr;
                if (props != schema.end()) {
                    if (auto p = props->find(key); p != props->end()) sub = &*p;
                }
                if (sub) {
                    check(*sub, value, path + "/" + key, out);
                } else if (auto ap = schema.find("additionalProperties");
                           ap != schema.end() && ap->is_boolean() && !ap->get<bool>()) {
                    out.push_back(
                        {path + "/" + key, "additionalProperties", "unexpected property"});
                }
            }
        }

        if (doc.is_array()) {
            if (auto it = schema.find("minItems");
                it != schema.end() && doc.size() < it->get<std::size_t>())
                out.push_back({path, "minItems", "fewer items than " + it->dump()});
            if (auto it = schema.find("maxItems");
                it != schema.end() && doc.size() > it->get<std::size_t>())
                out.push_back({path, "maxItems", "more items than " + it->dump()});
            if (auto it = schema.find("items"); it != schema.end() && it->is_object()) {
                std::size_t i = 0;
                for (const auto& v : doc) {
                    check(*it, v, path + "/" + std::to_string(i), out);
                    ++i;
                }
            }
        }
    }
};

}  // namespace a4l
