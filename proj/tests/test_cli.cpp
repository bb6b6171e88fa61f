#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include "fixtures.hpp"
#include "test_util.hpp"

// Binary-level checks: subcommand wiring, exit codes, file outputs.
// NEUS_CLI_PATH is injected by the build.

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const testutil::TempDir& dir, const std::string& args,
                  const std::string& env = "") {
    static int counter = 0;
    auto out_path = dir.file("cli-out-" + std::to_string(counter));
    auto err_path = dir.file("cli-err-" + std::to_string(counter));
    ++counter;

    std::string cmd = env + (env.empty() ? "" : " ") + "\"" + NEUS_CLI_PATH + "\" " + args +
                      " > \"" + out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    int status = std::system(cmd.c_str());
    int code = status == -1 ? -1 : WEXITSTATUS(status);
    return {code, testutil::read_file(out_path), testutil::read_file(err_path)};
}

}  // namespace

TEST_CASE("cli evaluate writes report artifacts") {
    fixtures::Workspace ws;
    auto out_dir = ws.dir.file("out");
    CliResult r = run_cli(ws.dir, "evaluate --corpus \"" + ws.corpus_path +
                                      "\" --baseline all-source --lexicon \"" +
                                      ws.lexicon_path + "\" --out \"" +
                                      out_dir.string() + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("Arousal_sum") != std::string::npos);
    CHECK(!testutil::read_file(out_dir / "report.json").empty());
    CHECK(!testutil::read_file(out_dir / "report.md").empty());
    CHECK(!testutil::read_file(out_dir / "annotations.jsonl").empty());
}

TEST_CASE("cli evaluate honors NEUS_LEXICON") {
    fixtures::Workspace ws;
    CliResult r = run_cli(ws.dir,
                          "evaluate --corpus \"" + ws.corpus_path +
                              "\" --baseline all-source --out \"" +
                              ws.dir.file("env-out").string() + "\"",
                          "NEUS_LEXICON=\"" + ws.lexicon_path + "\"");
    CHECK(r.exit_code == 0);
}

TEST_CASE("cli exit codes distinguish usage, io, and validation") {
    fixtures::Workspace ws;
    SUBCASE("no lexicon anywhere -> usage error") {
        CliResult r = run_cli(ws.dir, "evaluate --corpus \"" + ws.corpus_path +
                                          "\" --baseline all-source",
                              "NEUS_LEXICON=");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("bad count mode -> usage error") {
        CliResult r = run_cli(ws.dir, "evaluate --corpus \"" + ws.corpus_path +
                                          "\" --baseline all-source --lexicon \"" +
                                          ws.lexicon_path + "\" --count-mode sometimes");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("missing lexicon file -> io error") {
        CliResult r = run_cli(ws.dir, "evaluate --corpus \"" + ws.corpus_path +
                                          "\" --baseline all-source --lexicon \"" +
                                          ws.dir.file("nope.tsv").string() + "\"");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("invalid corpus -> validation error") {
        auto bad = testutil::write_file(ws.dir.file("bad.jsonl"), "{not json\n");
        CliResult r = run_cli(ws.dir, "evaluate --corpus \"" + bad +
                                          "\" --baseline all-source --lexicon \"" +
                                          ws.lexicon_path + "\"");
        CHECK(r.exit_code == 3);
    }
    SUBCASE("unknown subcommand -> usage error") {
        CHECK(run_cli(ws.dir, "frobnicate").exit_code == 1);
    }
}

TEST_CASE("cli summarize output pipes into evaluate") {
    fixtures::Workspace ws;
    auto hyps = ws.dir.file("lexrank.jsonl");
    CliResult s = run_cli(ws.dir, "summarize --corpus \"" + ws.corpus_path +
                                      "\" --max-words 33 --out \"" + hyps.string() + "\"");
    REQUIRE(s.exit_code == 0);

    CliResult e = run_cli(ws.dir, "evaluate --corpus \"" + ws.corpus_path +
                                      "\" --hypotheses \"" + hyps.string() +
                                      "\" --lexicon \"" + ws.lexicon_path +
                                      "\" --out \"" + ws.dir.file("lr-out").string() +
                                      "\"");
    CHECK(e.exit_code == 0);
}

TEST_CASE("cli evaluate runs are byte-identical") {
    fixtures::Workspace ws;
    std::string base = "evaluate --corpus \"" + ws.corpus_path +
                       "\" --baseline all-source --lexicon \"" + ws.lexicon_path + "\"";
    auto out1 = ws.dir.file("det1");
    auto out2 = ws.dir.file("det2");
    REQUIRE(run_cli(ws.dir, base + " --out \"" + out1.string() + "\"").exit_code == 0);
    REQUIRE(run_cli(ws.dir, base + " --out \"" + out2.string() + "\"").exit_code == 0);
    CHECK(testutil::read_file(out1 / "report.json") ==
          testutil::read_file(out2 / "report.json"));
    CHECK(testutil::read_file(out1 / "report.md") ==
          testutil::read_file(out2 / "report.md"));
    CHECK(testutil::read_file(out1 / "annotations.jsonl") ==
          testutil::read_file(out2 / "annotations.jsonl"));
}

TEST_CASE("cli format writes aligned src/tgt files") {
    fixtures::Workspace ws;
    std::string prefix = ws.dir.file("mtl").string();
    CliResult r = run_cli(ws.dir, "format --corpus \"" + ws.corpus_path +
                                      "\" --seed 13 --out \"" + prefix + "\"");
    REQUIRE(r.exit_code == 0);
    std::string src = testutil::read_file(prefix + ".src");
    std::string tgt = testutil::read_file(prefix + ".tgt");
    CHECK(std::count(src.begin(), src.end(), '\n') == 5);
    CHECK(std::count(tgt.begin(), tgt.end(), '\n') == 5);

    CliResult again = run_cli(ws.dir, "format --corpus \"" + ws.corpus_path +
                                          "\" --seed 13 --out \"" + prefix + "-b\"");
    REQUIRE(again.exit_code == 0);
    CHECK(testutil::read_file(prefix + "-b.src") == src);
}

TEST_CASE("cli correlate prints the statistics") {
    fixtures::Workspace ws;
    auto ann = testutil::write_file(ws.dir.file("ann.jsonl"), fixtures::kCorrelateJsonl);
    CliResult r = run_cli(ws.dir, "correlate --annotations \"" + ann + "\"");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("spearman") != std::string::npos);
    CHECK(r.out.find("0.6") != std::string::npos);
    CHECK(r.out.find("agreement") != std::string::npos);

    CliResult bad = run_cli(ws.dir, "correlate --annotations \"" +
                                        testutil::write_file(ws.dir.file("e.jsonl"), "") +
                                        "\"");
    CHECK(bad.exit_code == 1);
}
