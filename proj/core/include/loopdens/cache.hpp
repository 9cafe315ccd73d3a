#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "loopdens/densities.hpp"

namespace loopdens {

/// Append-only, line-delimited JSON result cache. A key is
/// (m, n, l, mode, digits). Exact entries never expire; a float entry
/// serves any request at its digit count or lower. Corrupt lines are
/// skipped (counted, reported via corrupt_lines()). Writes are serialized
/// through a single in-process writer.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path file);

    /// Resolution order: explicit flag value, LOOPDENS_CACHE environment
    /// variable, then "loopdens-cache.jsonl" in the current directory.
    static std::filesystem::path resolve_path(const std::string& flag_value);

    std::optional<DensityResult> lookup(const LatticeParams& params, Backend mode, long digits);
    void store(const DensityResult& result);

    const std::filesystem::path& path() const { return file_; }
    int corrupt_lines() const { return corrupt_; }

private:
    std::filesystem::path file_;
    std::mutex write_mutex_;
    int corrupt_ = 0;
};

extern const char* const tool_version;

} // namespace loopdens
