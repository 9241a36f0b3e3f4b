#include "tautilt/cache.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tautilt {

namespace {

bool is_decimal(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

CacheFile parse_cache(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("cache is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_string() || !doc.contains("entries") ||
        !doc["entries"].is_array()) {
        throw std::runtime_error("cache lacks a string 'version' and an 'entries' array");
    }
    CacheFile file;
    file.version = doc["version"].get<std::string>();
    std::set<std::tuple<std::string, int, int>> seen;
    for (const auto& item : doc["entries"]) {
        CacheEntry e;
        try {
            e.family = item.at("family").get<std::string>();
            e.r = item.at("r").get<int>();
            e.n = item.at("n").get<int>();
            e.value = item.at("value").get<std::string>();
        } catch (const nlohmann::json::exception& ex) {
            throw std::runtime_error(std::string("malformed cache entry: ") + ex.what());
        }
        if (!parse_family(e.family)) throw std::runtime_error("unknown family in cache: " + e.family);
        if (e.r < 1 || e.n < 1) throw std::runtime_error("cache entry with r or n below 1");
        if (!is_decimal(e.value)) throw std::runtime_error("cache value is not a decimal string: " + e.value);
        if (!seen.emplace(e.family, e.r, e.n).second) {
            throw std::runtime_error("duplicate cache entry " + e.family + "(" + std::to_string(e.r) + "," +
                                     std::to_string(e.n) + ")");
        }
        file.entries.push_back(std::move(e));
    }
    return file;
}

std::string serialize_cache(const CacheFile& file) {
    nlohmann::json doc;
    doc["version"] = file.version;
    doc["entries"] = nlohmann::json::array();
    for (const auto& e : file.entries) {
        doc["entries"].push_back({{"family", e.family}, {"r", e.r}, {"n", e.n}, {"value", e.value}});
    }
    return doc.dump(1) + "\n";
}

CacheFile cache_from_engine(const CountEngine& engine) {
    CacheFile file;
    for (const auto& [key, value] : engine.snapshot()) {
        file.entries.push_back({to_string(key.family), key.r, key.n, value.str()});
    }
    return file;
}

CacheLoadResult cache_load(const std::filesystem::path& path, CountEngine& engine) {
    CacheLoadResult result;
    std::ifstream in(path);
    if (!in) return result;
    std::ostringstream text;
    text << in.rdbuf();

    CacheFile file;
    try {
        file = parse_cache(text.str());
    } catch (const std::exception& e) {
        result.warning = "ignoring corrupt cache " + path.string() + ": " + e.what();
        return result;
    }
    if (file.version != kCacheVersion) {
        result.warning = "ignoring cache " + path.string() + " with version '" + file.version + "' (expected '" +
                         kCacheVersion + "')";
        return result;
    }
    for (const auto& e : file.entries) {
        engine.seed({*parse_family(e.family), e.r, e.n}, BigInt(e.value));
        ++result.loaded;
    }
    return result;
}

void cache_store(const std::filesystem::path& path, const CountEngine& engine) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << serialize_cache(cache_from_engine(engine));
        if (!out) throw std::runtime_error("failed writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

}  // namespace tautilt
