#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace cutkit {

/// On-disk result cache: one JSON file per canonical descriptor, holding named
/// records (e.g. "chartab", "check") for a group of a given order. Files with
/// another schema_version are ignored; unreadable files produce a warning and
/// a miss. Writes go to a temporary file that is then renamed into place.
class Cache {
public:
    static constexpr int kSchemaVersion = 1;
    using Warn = std::function<void(const std::string&)>;

    explicit Cache(std::filesystem::path dir, Warn warn = {}, int schema_version = kSchemaVersion);

    std::optional<nlohmann::json> get(const std::string& key, std::uint64_t order, const std::string& record) const;
    /// Failures to write are reported through warn and otherwise ignored.
    void put(const std::string& key, std::uint64_t order, const std::string& record,
             const nlohmann::json& value) const;

    std::filesystem::path path_for(const std::string& key) const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::optional<nlohmann::json> load(const std::string& key, std::uint64_t order, bool warn_stale) const;
    void warn(const std::string& message) const;

    std::filesystem::path dir_;
    Warn warn_;
    int schema_version_;
};

} // namespace cutkit
