#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "bicat/cli.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("demo reproduces the appendix example") {
    Run r = run({"demo", "appendix-toy"});
    CHECK(r.code == kExitPass);
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[ok] U_W identifies γ and i_idB"));
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[ok] EF3 fails"));
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[ok] B1..B5 hold"));
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("[ok] both toy variants"));
    CHECK(run({"demo", "other"}).code == kExitUsage);
}

TEST_CASE("exit codes") {
    CHECK(run({"check", "--conditions", "EF", "--psfun", "UW", "fixtures/appx-toy"}).code == kExitFail);
    CHECK(run({"check", "--conditions", "B", "--psfun", "UW", "appx-toy"}).code == kExitPass);
    CHECK(run({"--bogus-flag"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"validate", "no-such-document"}).code == kExitUsage);
    CHECK(run({"check", "--conditions", "Q", "--psfun", "id", "appx-toy"}).code == kExitUsage);
    CHECK(run({"check", "--conditions", "B", "--psfun", "id", "appx-toy", "--class-src", "W"}).code ==
          kExitPrecondition);
    CHECK(run({"localize", "arrow2", "--class", "all"}).code == kExitPrecondition);
    CHECK(run({"validate", "appx-toy"}).code == kExitPass);
    CHECK(run({"check-bf", "appx-toy", "--class", "W"}).code == kExitPass);
    CHECK(run({"check-bf", "arrow2", "--class", "all"}).code == kExitFail);
    CHECK(run({"saturate", "iso2", "--class", "ids"}).code == kExitPass);
    CHECK(run({"cross-validate", "appx-toy", "--psfun", "id", "--class-src", "min", "--class-tgt", "W"}).code ==
          kExitPass);
}

TEST_CASE("machine format mirrors the reports") {
    Run r = run({"--format", "machine", "check", "--conditions", "EF", "--psfun", "UW", "appx-toy"});
    REQUIRE(r.code == kExitFail);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exit_code"] == 1);
    REQUIRE(j["reports"].size() == 3);
    const auto& ef3 = j["reports"][2];
    CHECK(ef3["condition"] == "EF3");
    CHECK(ef3["verdict"] == "fail");
    std::set<std::string> pair;
    for (const auto& b : ef3["counterexample"])
        if (std::string(b["role"]).starts_with("preimage")) pair.insert(b["name"]);
    CHECK(pair == std::set<std::string>{"γ", "i_idB"});
}

TEST_CASE("worker count does not change the output") {
    std::vector<std::string> base = {"--format", "machine", "check", "--conditions", "all", "--psfun", "id",
                                     "appx-toy", "--class-src", "min", "--class-tgt", "W"};
    Run a = run(base);
    auto with_jobs = base;
    with_jobs.insert(with_jobs.begin(), {"--jobs", "3"});
    Run b = run(with_jobs);
    CHECK(a.code == b.code);
    auto ja = nlohmann::json::parse(a.out);
    auto jb = nlohmann::json::parse(b.out);
    REQUIRE(ja["reports"].size() == jb["reports"].size());
    for (std::size_t i = 0; i < ja["reports"].size(); ++i) {
        CHECK(ja["reports"][i]["verdict"] == jb["reports"][i]["verdict"]);
        CHECK(ja["reports"][i]["witness"] == jb["reports"][i]["witness"]);
        CHECK(ja["reports"][i]["counterexample"] == jb["reports"][i]["counterexample"]);
    }
}

TEST_CASE("strict fast path does not change verdicts") {
    Run a = run({"check", "--conditions", "all", "--psfun", "UW", "appx-toy"});
    Run b = run({"--strict-fast-path", "check", "--conditions", "all", "--psfun", "UW", "appx-toy"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
}

TEST_CASE("localize writes a document that validates") {
    auto path = std::filesystem::temp_directory_path() / "bicat-localize-test.json";
    Run r = run({"localize", "appx-toy", "--class", "W", "--out", path.string()});
    CHECK(r.code == kExitPass);
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("5 spans"));
    CHECK(run({"validate", path.string()}).code == kExitPass);
    std::filesystem::remove(path);
}
