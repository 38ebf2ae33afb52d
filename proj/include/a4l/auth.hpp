#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "a4l/errors.hpp"

namespace a4l {

enum class Scope { IngestCaliper, IngestEduapi, IngestApp, ReadResults, Admin };

inline const char* scope_name(Scope s) {
    switch (s) {
        case Scope::IngestCaliper: return "ingest:caliper";
        case Scope::IngestEduapi: return "ingest:eduapi";
        case Scope::IngestApp: return "ingest:app";
        case Scope::ReadResults: return "read:results";
        case Scope::Admin: return "admin";
    }
    return "?";
}

inline std::optional<Scope> parse_scope(std::string_view s) {
    if (s == "ingest:caliper") return Scope::IngestCaliper;
    if (s == "ingest:eduapi") return Scope::IngestEduapi;
    if (s == "ingest:app") return Scope::IngestApp;
    if (s == "read:results") return Scope::ReadResults;
    if (s == "admin") return Scope::Admin;
    return std::nullopt;
}

struct Principal {
    std::string key_id;
    std::set<Scope> scopes;

    bool has(Scope s) const { return scopes.count(s) > 0; }

    void require(Scope s) const {
        if (!has(s)) throw InsufficientScope(scope_name(s));
    }
};

namespace detail {

// Length-independent comparison so key lookup does not leak secret
// prefixes through timing.
inline bool constant_time_equals(std::string_view a, std::string_view b) {
    unsigned char diff = a.size() == b.size() ? 0 : 1;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned char ca = i < a.size() ? static_cast<unsigned char>(a[i]) : 0;
        const unsigned char cb = i < b.size() ? static_cast<unsigned char>(b[i]) : 0;
        diff |= static_cast<unsigned char>(ca ^ cb);
    }
    return diff == 0;
}

}  // namespace detail

// Static API keys with scopes, loaded from the keys file:
//   {"keys": [{"key_id": "K1", "secret": "...", "scopes": ["ingest:caliper"]}]}
class KeyStore {
public:
    KeyStore() = default;

    static KeyStore from_json(const nlohmann::json& j) {
        KeyStore ks;
        if (!j.is_object() || !j.contains("keys") || !j.at("keys").is_array())
            throw ConfigError("keys file must be an object with a 'keys' array");
        for (const auto& entry : j.at("keys")) {
            Entry e;
            e.key_id = entry.at("key_id").get<std::string>();
            e.secret = entry.at("secret").get<std::string>();
            for (const auto& s : entry.at("scopes")) {
                auto scope = parse_scope(s.get<std::string>());
                if (!scope) throw ConfigError("unknown scope in keys file: " + s.dump());
                e.scopes.insert(*scope);
            }
            if (e.scopes.empty()) throw ConfigError("key " + e.key_id + " has no scopes");
            ks.entries_.push_back(std::move(e));
        }
        return ks;
    }

    static KeyStore load_file(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot read keys file: " + path.string());
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("keys file is not valid JSON: " + std::string(e.what()));
        }
        return from_json(j);
    }

    // header value of "Authorization"; empty when the header is absent.
    Principal authenticate(std::string_view authorization) const {
        if (authorization.empty()) throw MissingCredentials();
        constexpr std::string_view prefix = "Bearer ";
        if (authorization.substr(0, prefix.size()) != prefix) throw MissingCredentials();
        const std::string_view token = authorization.substr(prefix.size());
        // Scan every entry unconditionally; the match index must not
        // shortcut the comparison work.
        const Entry* found = nullptr;
        for (const auto& e : entries_) {
            if (detail::constant_time_equals(token, e.secret)) found = &e;
        }
        if (!found) throw InvalidCredentials();
        return Principal{found->key_id, found->scopes};
    }

    Principal authenticate_and_require(std::string_view authorization, Scope scope) const {
        Principal p = authenticate(authorization);
        p.require(scope);
        return p;
    }

    bool empty() const { return entries_.empty(); }

private:
    struct Entry {
        std::string key_id;
        std::string secret;
        std::set<Scope> scopes;
    };
    std::vector<Entry> entries_;
};

}  // namespace a4l
