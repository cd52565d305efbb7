#include "cutkit/cache.hpp"

#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace cutkit {

namespace fs = std::filesystem;

Cache::Cache(fs::path dir, Warn warn, int schema_version)
    : dir_(std::move(dir)), warn_(std::move(warn)), schema_version_(schema_version)
{
}

fs::path Cache::path_for(const std::string& key) const
{
    // Keep letters, digits and '-'; everything else becomes _XX.
    static const char* hex = "0123456789abcdef";
    std::string name;
    for (unsigned char c : key) {
        if (std::isalnum(c) || c == '-') {
            name += static_cast<char>(c);
        } else {
            name += '_';
            name += hex[c >> 4];
            name += hex[c & 15];
        }
    }
    return dir_ / (name + ".json");
}

void Cache::warn(const std::string& message) const
{
    if (warn_) warn_(message);
}

std::optional<nlohmann::json> Cache::load(const std::string& key, std::uint64_t order, bool warn_corrupt) const
{
    const fs::path path = path_for(key);
    std::error_code ec;
    if (!fs::exists(path, ec)) return std::nullopt;
    std::ifstream in(path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception&) {
        if (warn_corrupt) warn("cache file " + path.string() + " is corrupt; recomputing");
        return std::nullopt;
    }
    if (!doc.is_object() || !doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
        !doc.contains("records") || !doc["records"].is_object()) {
        if (warn_corrupt) warn("cache file " + path.string() + " has an unexpected layout; recomputing");
        return std::nullopt;
    }
    if (doc["schema_version"].get<int>() != schema_version_) return std::nullopt;
    if (doc.value("key", std::string{}) != key || doc.value("order", std::uint64_t{0}) != order) return std::nullopt;
    return doc;
}

std::optional<nlohmann::json> Cache::get(const std::string& key, std::uint64_t order, const std::string& record) const
{
    auto doc = load(key, order, true);
    if (!doc) return std::nullopt;
    auto& records = (*doc)["records"];
    if (!records.contains(record)) return std::nullopt;
    return records[record];
}

void Cache::put(const std::string& key, std::uint64_t order, const std::string& record,
                const nlohmann::json& value) const
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) {
        warn("cannot create cache directory " + dir_.string() + ": " + ec.message());
        return;
    }
    nlohmann::json doc = load(key, order, false).value_or(nlohmann::json{
        {"schema_version", schema_version_}, {"key", key}, {"order", order}, {"records", nlohmann::json::object()}});
    doc["records"][record] = value;

    static std::atomic<unsigned> counter{0};
    const fs::path path = path_for(key);
    std::ostringstream suffix;
    suffix << ".tmp." << ::getpid() << "." << counter++;
    const fs::path tmp = path.string() + suffix.str();
    {
        std::ofstream out(tmp);
        out << doc.dump(1) << '\n';
        if (!out) {
            warn("cannot write cache file " + tmp.string());
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        warn("cannot move cache file into place: " + ec.message());
        fs::remove(tmp, ec);
    }
}

} // namespace cutkit
