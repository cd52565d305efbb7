#include "cutkit/cache.hpp"

#include <gtest/gtest.h>

#include <fstream>

#include <unistd.h>

using namespace cutkit;
using json = nlohmann::json;

namespace {

std::filesystem::path fresh_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("cutkit-test-" + name + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST(Cache, PutGet)
{
    const auto dir = fresh_dir("putget");
    Cache c(dir);
    EXPECT_FALSE(c.get("q8", 8, "check").has_value());
    c.put("q8", 8, "check", json{{"cut", true}});
    c.put("q8", 8, "chartab", json{{"rows", 5}});
    auto hit = c.get("q8", 8, "check");
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ((*hit)["cut"], true);
    EXPECT_EQ((*c.get("q8", 8, "chartab"))["rows"], 5);
    EXPECT_FALSE(c.get("q8", 9, "check").has_value());
    std::filesystem::remove_all(dir);
}

TEST(Cache, PathEscaping)
{
    Cache c(fresh_dir("paths"));
    const std::string name = c.path_for("perm(3;(0,1))").filename().string();
    EXPECT_EQ(name.find('('), std::string::npos);
    EXPECT_EQ(name.find(';'), std::string::npos);
    EXPECT_NE(c.path_for("dp(a,b)"), c.path_for("dp(a;b)"));
}

TEST(Cache, VersionBumpIsAMiss)
{
    const auto dir = fresh_dir("version");
    Cache(dir).put("q8", 8, "check", json{{"cut", true}});
    Cache newer(dir, {}, Cache::kSchemaVersion + 1);
    EXPECT_FALSE(newer.get("q8", 8, "check").has_value());
    newer.put("q8", 8, "check", json{{"cut", false}});
    EXPECT_EQ((*newer.get("q8", 8, "check"))["cut"], false);
    std::filesystem::remove_all(dir);
}

TEST(Cache, CorruptionWarnsAndMisses)
{
    const auto dir = fresh_dir("corrupt");
    std::vector<std::string> warnings;
    Cache c(dir, [&](const std::string& m) { warnings.push_back(m); });
    c.put("q8", 8, "check", json{{"cut", true}});
    {
        std::ofstream f(c.path_for("q8"), std::ios::trunc);
        f << "{not json";
    }
    EXPECT_FALSE(c.get("q8", 8, "check").has_value());
    EXPECT_FALSE(warnings.empty());
    c.put("q8", 8, "check", json{{"cut", true}});
    EXPECT_TRUE(c.get("q8", 8, "check").has_value());
    std::filesystem::remove_all(dir);
}
