#pragma once

#include <map>
#include <optional>
#include <string>

#include "crossnest/numeric.hpp"

namespace crossnest {

// Versioned JSON store for expensive counts. Contents only short-circuit
// recomputation; deleting the file is always safe.
class CountCache {
  public:
    explicit CountCache(std::string path);  // empty path disables the cache
    // CROSSNEST_CACHE_FILE when set, else crossnest_cache.json in the
    // working directory.
    static CountCache open_default();
    static CountCache disabled();

    bool enabled() const { return !path_.empty(); }
    std::optional<BigInt> lookup(const std::string& key) const;
    void store(const std::string& key, const BigInt& value);  // persists at once

  private:
    void load();
    void save() const;  // temp file + rename, single writer

    std::string path_;
    std::map<std::string, std::string> entries_;
};

std::string gkj_cache_key(int k, int j, int m);
std::string fk_cache_key(int k, int m);

}  // namespace crossnest
