#include "crossnest/cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace crossnest {

CountCache::CountCache(std::string path) : path_(std::move(path)) {
    if (enabled()) load();
}

CountCache CountCache::open_default() {
    if (const char* env = std::getenv("CROSSNEST_CACHE_FILE")) return CountCache(env);
    std::string base;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        base = xdg;
    else if (const char* home = std::getenv("HOME"))
        base = std::string(home) + "/.cache";
    else
        return CountCache("crossnest_cache.json");  // last resort: working directory
    return CountCache(base + "/crossnest/counts.json");
}

CountCache CountCache::disabled() { return CountCache(std::string()); }

std::optional<BigInt> CountCache::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return BigInt(it->second);
}

void CountCache::store(const std::string& key, const BigInt& value) {
    if (!enabled()) return;
    entries_[key] = value.str();
    save();
}

void CountCache::load() {
    std::ifstream in(path_);
    if (!in) return;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    // Unreadable or wrong-version files are ignored, not errors.
    if (j.is_discarded() || !j.is_object()) return;
    if (j.value("version", 0) != 1) return;
    auto it = j.find("entries");
    if (it == j.end() || !it->is_object()) return;
    for (const auto& [key, value] : it->items())
        if (value.is_string()) entries_[key] = value.get<std::string>();
}

void CountCache::save() const {
    nlohmann::json j{{"version", 1}, {"entries", entries_}};
    std::error_code ec;
    std::filesystem::path dir = std::filesystem::path(path_).parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir, ec);
    std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;  // unwritable cache is a no-op, not an error
        out << j.dump(1) << "\n";
    }
    std::rename(tmp.c_str(), path_.c_str());
}

std::string gkj_cache_key(int k, int j, int m) {
    return "gkj:k=" + std::to_string(k) + ",j=" + std::to_string(j) +
           ",m=" + std::to_string(m);
}

std::string fk_cache_key(int k, int m) {
    return "fk:k=" + std::to_string(k) + ",m=" + std::to_string(m);
}

}  // namespace crossnest
