// Versioned on-disk cache for computed bases. One JSON file per artifact,
// written atomically (temp file + rename); unreadable or mismatched files are
// ignored and rebuilt.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "jd/rational.hpp"

namespace jd {

using Json = nlohmann::ordered_json;

inline constexpr int cache_schema_version = 1;
inline constexpr const char* cache_generator_version = "g1";

inline std::string default_cache_dir()
{
    if (const char* env = std::getenv("JD_CACHE_DIR"))
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::string(xdg) + "/jd";
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/jd";
    return "jd-cache";
}

struct Cache {
    std::string dir;
    bool enabled = true;

    std::filesystem::path path_for(const std::string& name) const
    {
        return std::filesystem::path(dir) / (name + ".json");
    }

    std::optional<Json> load(const std::string& name) const
    {
        if (!enabled)
            return std::nullopt;
        std::ifstream in(path_for(name));
        if (!in)
            return std::nullopt;
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            return std::nullopt;
        if (j.value("schema", -1) != cache_schema_version)
            return std::nullopt;
        if (j.value("generator", "") != cache_generator_version)
            return std::nullopt;
        return j;
    }

    void store(const std::string& name, Json j) const
    {
        if (!enabled)
            return;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        j["schema"] = cache_schema_version;
        j["generator"] = cache_generator_version;
        auto final_path = path_for(name);
        auto tmp = final_path;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            if (!out)
                return; // cache is best-effort
            out << j.dump();
        }
        std::filesystem::rename(tmp, final_path, ec);
        if (ec)
            std::filesystem::remove(tmp, ec);
    }

    void clear() const
    {
        std::error_code ec;
        for (auto& e : std::filesystem::directory_iterator(dir, ec))
            if (e.path().extension() == ".json")
                std::filesystem::remove(e.path(), ec);
    }
};

// hex encoding for canonical keys inside JSON
inline std::string hex_encode(const std::string& s)
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * s.size());
    for (unsigned char c : s) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

inline std::string hex_decode(const std::string& s)
{
    auto val = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        throw Error(Error::internal, "bad hex");
    };
    if (s.size() % 2)
        throw Error(Error::internal, "bad hex length");
    std::string out;
    out.reserve(s.size() / 2);
    for (size_t i = 0; i < s.size(); i += 2)
        out.push_back((char)(val(s[i]) * 16 + val(s[i + 1])));
    return out;
}

} // namespace jd
