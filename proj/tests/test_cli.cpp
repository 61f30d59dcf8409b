#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <unistd.h>

#include "gtm/cli/app.hpp"
#include "gtm/cli/render.hpp"
#include "support/oracle.hpp"

namespace gtm::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Outcome o = invoke(std::move(args));
    return nlohmann::json::parse(o.out);
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("gtm_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

TEST(CliGenerate, Examples) {
    EXPECT_EQ(invoke({"generate", "-b", "2", "-m", "2", "-n", "8"}).out, "01101001\n");
    EXPECT_EQ(invoke({"generate", "-b", "3", "-m", "3", "-n", "9"}).out, "012120201\n");
    // s_2(2) = 1, so the third letter repeats the second.
    EXPECT_EQ(invoke({"generate", "-b", "2", "-m", "12", "-n", "4"}).out, "0,1,1,2\n");
    EXPECT_EQ(invoke({"generate", "-b", "13", "-m", "12", "-n", "3"}).out, "0,1,2\n");
}

TEST(CliGenerate, AgreesWithOdometer) {
    const auto doc = invoke_json({"generate", "-b", "3", "-m", "5", "-n", "200"});
    const Word expected = oracle::odometer_prefix(3, 5, 200);
    EXPECT_EQ(doc["results"][0]["letters"].get<std::vector<Letter>>(), expected);
}

TEST(CliComplexity, ThueMorseRows) {
    const auto o = invoke({"complexity", "-b", "2", "-m", "2", "--max-n", "9", "--format", "json"});
    ASSERT_EQ(o.code, kSuccess);
    const auto doc = nlohmann::json::parse(o.out);
    const oracle::WindowLanguage windows(2, 2, 9);
    ASSERT_EQ(doc["results"].size(), 10u);
    for (std::size_t n = 0; n <= 9; ++n) {
        const auto& row = doc["results"][n];
        EXPECT_EQ(row["n"], n);
        EXPECT_EQ(row["c"], windows.complexity(n)) << n;
        EXPECT_TRUE(row["match"].get<bool>());
    }
    EXPECT_EQ(doc["results"][9]["c"], 24);
}

TEST(CliComplexity, PeriodicRowsAreConstant) {
    const auto doc = invoke_json({"complexity", "-b", "3", "-m", "2", "--max-n", "5"});
    for (std::size_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(doc["results"][n]["c"], 2);
        EXPECT_EQ(doc["results"][n]["branch"], "periodic");
    }
}

TEST(CliComplexity, FirstTwoLevels) {
    const auto doc = invoke_json({"complexity", "-b", "2", "-m", "3", "--max-n", "2"});
    EXPECT_EQ(doc["results"][1]["c"], 3);
    EXPECT_EQ(doc["results"][2]["c"], 9);
    EXPECT_EQ(doc["params"]["q"], 3);
}

TEST(CliRichness, ExitCodes) {
    EXPECT_EQ(invoke({"richness", "-b", "2", "-m", "2", "--max-n", "32"}).code, kSuccess);
    EXPECT_EQ(invoke({"richness", "-b", "3", "-m", "4", "--max-n", "24"}).code, kSuccess);
    const auto periodic = invoke({"richness", "-b", "3", "-m", "2", "--max-n", "24"});
    EXPECT_EQ(periodic.code, kSuccess);
    EXPECT_NE(periodic.out.find("periodic case"), std::string::npos);
}

TEST(CliRichness, JsonSummary) {
    const auto doc = invoke_json({"richness", "-b", "2", "-m", "3", "--max-n", "6"});
    EXPECT_EQ(doc["results"].size(), 6u);
    for (const auto& row : doc["results"]) EXPECT_EQ(row["defect"], 0);
    EXPECT_EQ(doc["summary"]["antimorphisms"], (nlohmann::json{"Psi_0", "Psi_1", "Psi_2"}));
    EXPECT_TRUE(doc["summary"]["closure"]["ok"].get<bool>());
    EXPECT_TRUE(doc["summary"]["injectivity"]["ok"].get<bool>());
    EXPECT_FALSE(doc["summary"]["periodic_case"].get<bool>());
}

TEST(CliBispecial, ThueMorseLengthTwo) {
    const auto o = invoke({"bispecial", "-b", "2", "-m", "2", "-n", "2", "--format", "json"});
    ASSERT_EQ(o.code, kSuccess);
    const auto doc = nlohmann::json::parse(o.out);
    ASSERT_EQ(doc["results"].size(), 2u);
    for (const auto& row : doc["results"]) {
        EXPECT_EQ(row["bilateral_order"], 1);
        EXPECT_EQ(row["pext_count"], 2);
        EXPECT_EQ(row["expected"]["bilateral_order"], 1);
        EXPECT_TRUE(row["match"].get<bool>());
    }
}

TEST(CliBispecial, WeakBispecialsAtLastShortLength) {
    const auto doc = invoke_json({"bispecial", "-b", "2", "-m", "3", "-n", "3"});
    ASSERT_FALSE(doc["results"].empty());
    for (const auto& row : doc["results"]) {
        EXPECT_EQ(row["bilateral_order"], -1);
        EXPECT_EQ(row["pext_count"], 0);
        EXPECT_TRUE(row["match"].get<bool>());
    }
}

TEST(CliBispecial, PeriodicWordHasNoneAtLengthTwo) {
    // b = 4 is congruent to 1 mod 3, so every length-2 factor has a single extension.
    const auto o = invoke({"bispecial", "-b", "4", "-m", "3", "-n", "2", "--format", "json"});
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_TRUE(nlohmann::json::parse(o.out)["results"].empty());
}

TEST(CliBispecial, RangeCoversEveryShortLength) {
    const auto o = invoke({"bispecial", "-b", "3", "-m", "4", "--max-n", "5", "--format", "json"});
    EXPECT_EQ(o.code, kSuccess);
    const auto doc = nlohmann::json::parse(o.out);
    EXPECT_EQ(doc["summary"]["contradictions"], 0);
    EXPECT_EQ(doc["summary"]["checked_against_table"], doc["summary"]["bispecial_count"]);
}

TEST(CliVerify, AllPropertiesHold) {
    const auto o = invoke({"verify", "-b", "2", "-m", "2"});
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_NE(o.out.find("all properties hold"), std::string::npos);

    for (auto [b, m, id] : {std::tuple{"2", "3", "property_iv"}, std::tuple{"3", "4", "property_x"}}) {
        const auto doc = invoke_json({"verify", "-b", b, "-m", m});
        bool seen = false;
        for (const auto& r : doc["results"]) {
            if (r["id"] != id) continue;
            seen = true;
            EXPECT_EQ(r["status"], "pass");
        }
        EXPECT_TRUE(seen) << id;
        EXPECT_TRUE(doc["summary"]["all_passed"].get<bool>());
    }
}

TEST(CliJson, RoundTripsByteIdentical) {
    for (const std::vector<std::string>& args : {std::vector<std::string>{"complexity", "-b", "2", "-m", "4", "--max-n", "12"},
                                                 {"richness", "-b", "3", "-m", "5", "--max-n", "8"},
                                                 {"bispecial", "-b", "2", "-m", "3", "--max-n", "6"},
                                                 {"verify", "-b", "3", "-m", "2"}}) {
        auto full = args;
        full.insert(full.end(), {"--format", "json"});
        const std::string text = invoke(full).out;
        EXPECT_EQ(nlohmann::json::parse(text).dump(2) + "\n", text) << args[0];
    }
}

TEST(CliJson, Envelope) {
    const auto doc = invoke_json({"complexity", "-b", "3", "-m", "4", "--max-n", "3"});
    EXPECT_EQ(doc["command"], "complexity");
    EXPECT_EQ(doc["params"], (nlohmann::json{{"b", 3}, {"m", 4}, {"q", 2}, {"periodic", false}}));
    EXPECT_TRUE(doc["results"].is_array());
}

TEST(CliCsv, HeaderAlwaysEmitted) {
    const auto o = invoke({"bispecial", "-b", "4", "-m", "3", "-n", "2", "--format", "csv"});
    EXPECT_EQ(o.out, csv_header(Command::Bispecial) + "\n");

    const auto rows = invoke({"complexity", "-b", "2", "-m", "2", "--max-n", "2", "--format", "csv"});
    EXPECT_EQ(rows.out,
              "n,c,delta_c,formula_c,formula_delta_c,branch,match\n"
              "0,1,1,1,1,zero,true\n"
              "1,2,2,2,2,one,true\n"
              "2,4,2,4,2,low_range,true\n");
}

TEST(CliCsv, QuotesCommaSeparatedWords) {
    const auto o = invoke({"generate", "-b", "2", "-m", "12", "-n", "3", "--format", "csv"});
    EXPECT_EQ(o.out, "length,word\n3,\"0,1,1\"\n");
}

TEST(CliUsage, InvalidInputsExitTwo) {
    const std::vector<std::vector<std::string>> bad = {
        {"generate", "-b", "1", "-m", "2", "-n", "8"},
        {"generate", "-b", "2", "-m", "0", "-n", "8"},
        {"generate", "-b", "2", "-m", "2"},
        {"generate", "-b", "-3", "-m", "2", "-n", "4"},
        {"complexity", "-b", "2", "-m", "2", "--max-n", "0"},
        {"richness", "-b", "2", "-m", "2"},
        {"bispecial", "-b", "2", "-m", "2", "-n", "2", "--max-n", "3"},
        {"bispecial", "-b", "2", "-m", "2", "-n", "0"},
        {"complexity", "-b", "2", "-m", "2", "--max-n", "4", "--format", "xml"},
        {"generate", "-b", "2", "-m", "2", "-n", "4", "--bogus"},
        {"frobnicate"},
        {},
    };
    for (const auto& args : bad) {
        const auto o = invoke(args);
        EXPECT_EQ(o.code, kUsage) << (args.empty() ? "<none>" : args[0]);
        EXPECT_FALSE(o.err.empty());
    }
}

TEST(CliUsage, HelpExitsZeroAndListsCsvColumns) {
    EXPECT_EQ(invoke({"--help"}).code, kSuccess);
    const auto o = invoke({"complexity", "--help"});
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_NE(o.out.find(csv_header(Command::Complexity)), std::string::npos);
}

TEST(CliCache, WarmAndColdRunsAgree) {
    TempDir dir;
    const std::vector<std::string> base = {"richness", "-b", "2", "-m", "3", "--max-n", "20", "--format", "json"};
    auto with_cache = base;
    with_cache.insert(with_cache.end(), {"--cache-dir", dir.path().string()});
    auto no_cache = with_cache;
    no_cache.push_back("--no-cache");

    const auto cold = invoke(with_cache);
    ASSERT_EQ(cold.code, kSuccess);
    EXPECT_TRUE(std::filesystem::exists(dir.path() / "2_3" / "20.bin"));
    const auto warm = invoke(with_cache);
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_EQ(cold.out, invoke(no_cache).out);
    EXPECT_EQ(cold.out, invoke(base).out);
}

TEST(CliCache, EnvironmentSuppliesDefault) {
    TempDir dir;
    ::setenv("GTM_CACHE_DIR", dir.path().c_str(), 1);
    const auto o = invoke({"complexity", "-b", "3", "-m", "4", "--max-n", "6"});
    const auto ignored = invoke({"complexity", "-b", "3", "-m", "5", "--max-n", "6", "--no-cache"});
    ::unsetenv("GTM_CACHE_DIR");
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_EQ(ignored.code, kSuccess);
    EXPECT_TRUE(std::filesystem::exists(dir.path() / "3_4" / "6.bin"));
    EXPECT_FALSE(std::filesystem::exists(dir.path() / "3_5"));
}

TEST(CliOutput, WritesFile) {
    TempDir dir;
    std::filesystem::create_directories(dir.path());
    const auto file = dir.path() / "word.txt";
    const auto o = invoke({"generate", "-b", "2", "-m", "2", "-n", "8", "--output", file.string()});
    EXPECT_EQ(o.code, kSuccess);
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(file);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "01101001");
}

}  // namespace
}  // namespace gtm::cli
