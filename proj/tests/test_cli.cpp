#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "test_util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using testutil::fixture_path;
using testutil::read_file;

namespace {

fs::path work_root() {
  auto dir = fs::temp_directory_path() / "mqmchat-cli-tests";
  return dir;
}

fs::path fresh(const std::string& name) {
  auto dir = work_root() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(MQMCHAT_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("ingest normalization is a fixpoint") {
  auto out1 = fresh("ingest1");
  auto out2 = fresh("ingest2");
  CHECK(run_cli("ingest --input " + fixture_path("mini_zh.jsonl") + " --out " + out1.string()) == 0);
  CHECK(run_cli("ingest --input " + (out1 / "canonical.jsonl").string() + " --out " +
                out2.string()) == 0);
  CHECK(read_file((out1 / "canonical.jsonl").string()) ==
        read_file((out2 / "canonical.jsonl").string()));
}

TEST_CASE("labelstudio import matches the reviewed golden file") {
  auto out = fresh("ls");
  CHECK(run_cli("ingest --format labelstudio --kind human_chat --set-id labelstudio_small --input " +
                fixture_path("labelstudio_small.json") + " --corpus " + fixture_path("mini_zh.jsonl") +
                " --out " + out.string()) == 0);
  CHECK(read_file((out / "canonical.jsonl").string()) ==
        read_file(fixture_path("golden/labelstudio_small.canonical.jsonl")));
}

TEST_CASE("broken offsets exit with the input-error code") {
  auto out = fresh("bad");
  CHECK(run_cli("ingest --input " + fixture_path("bad_annotations.jsonl") + " --corpus " +
                fixture_path("mini_zh.jsonl") + " --out " + out.string()) == 2);
  auto validation = json::parse(read_file((out / "validation.json").string()));
  CHECK(validation["hard"].get<int>() == 1);
  CHECK(validation["violations"][0]["code"] == "span-out-of-range");
}

TEST_CASE("missing inputs fail fast with exit 2") {
  auto out = fresh("missing");
  CHECK(run_cli("score --corpus /nonexistent.jsonl --annotations " + fixture_path("gold_chat.jsonl") +
                " --out " + out.string()) == 2);
}

TEST_CASE("score emits report, heatmap, stats") {
  auto out = fresh("score");
  CHECK(run_cli("score --corpus " + fixture_path("mini_zh.jsonl") + " --annotations " +
                fixture_path("gold_chat.jsonl") + " --eval-config " +
                testutil::repo_path("configs/mqmchat.default.json") + " --out " + out.string()) == 0);
  CHECK(read_file((out / "heatmap.csv").string()) ==
        read_file(fixture_path("golden/heatmap_system_type.csv")));
  auto report = json::parse(read_file((out / "score_report.json").string()));
  CHECK(report["rows"].size() == 8);
  CHECK(report.contains("config_hash"));
  CHECK(fs::exists(out / "stats.csv"));

  SUBCASE("group-by type,severity yields the 7x3 matrix") {
    auto out2 = fresh("score-group");
    CHECK(run_cli("score --corpus " + fixture_path("mini_zh.jsonl") + " --annotations " +
                  fixture_path("gold_chat.jsonl") + " --group-by type,severity --out " +
                  out2.string()) == 0);
    std::string csv = read_file((out2 / "heatmap.csv").string());
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);  // header + 7 type rows
    CHECK(csv.find("major,minor,neutral") != std::string::npos);
  }
}

TEST_CASE("autoannotate with the no-error stub produces an empty scoreable set") {
  auto out = fresh("auto-empty");
  CHECK(run_cli("autoannotate --corpus " + fixture_path("mini_zh.jsonl") +
                " --mock no_error --out " + out.string()) == 0);
  auto manifest = json::parse(read_file((out / "manifest.json").string()));
  CHECK(manifest["counts"]["failed"].get<int>() == 0);
  CHECK(manifest["counts"]["no_error_responses"].get<int>() == 40);

  auto out2 = fresh("auto-empty-score");
  CHECK(run_cli("score --corpus " + fixture_path("mini_zh.jsonl") + " --annotations " +
                (out / "annotations.jsonl").string() + " --out " + out2.string()) == 0);
  auto report = json::parse(read_file((out2 / "score_report.json").string()));
  REQUIRE(report["rows"].size() == 8);
  for (const auto& row : report["rows"]) {
    CHECK(row["ec"].get<int>() == 0);
    CHECK(row["oqs"].get<double>() == 100.0);
  }
}

TEST_CASE("agree prf on identical sets is perfect") {
  auto out = fresh("prf-self");
  CHECK(run_cli("agree prf --corpus " + fixture_path("mini_zh.jsonl") + " --gold " +
                fixture_path("gold_chat.jsonl") + " --pred " + fixture_path("gold_chat.jsonl") +
                " --out " + out.string()) == 0);
  auto report = json::parse(read_file((out / "agreement_report.json").string()));
  CHECK(report["macro"]["precision"].get<double>() == 1.0);
  CHECK(report["macro"]["recall"].get<double>() == 1.0);
  CHECK(report["macro"]["f1"].get<double>() == 1.0);
  CHECK(report["tau"].get<double>() == 0.5);
  CHECK(report["documents"].size() == 40);
}

TEST_CASE("agree relabel reports raw counts alongside percentages") {
  auto out = fresh("relabel");
  CHECK(run_cli("agree relabel --corpus " + fixture_path("mini_zh.jsonl") + " --standard " +
                fixture_path("gold_standard.jsonl") + " --chat " + fixture_path("gold_chat.jsonl") +
                " --out " + out.string()) == 0);
  auto report = json::parse(read_file((out / "relabel_report.json").string()));
  CHECK(report["overall"]["total"].get<int>() == 19);
  CHECK(report["overall"]["relabeled"].get<int>() == 8);
  CHECK(report["overall"]["chat_specific"].get<int>() == 6);
  CHECK(report["overall"]["unmatched"].get<int>() == 1);
}

TEST_CASE("agree relabel rejects taxonomy mismatches") {
  auto out = fresh("relabel-bad");
  CHECK(run_cli("agree relabel --corpus " + fixture_path("mini_zh.jsonl") + " --standard " +
                fixture_path("gold_chat.jsonl") + " --chat " + fixture_path("gold_chat.jsonl") +
                " --out " + out.string()) == 2);
}

TEST_CASE("canned auto annotations score the hand-computed macro against gold") {
  auto ann = fresh("prf-auto-ann");
  auto out = fresh("prf-auto");
  REQUIRE(run_cli("autoannotate --corpus " + fixture_path("mini_zh.jsonl") + " --mock " +
                  fixture_path("mock_responses.json") + " --out " + ann.string()) == 0);
  CHECK(run_cli("agree prf --corpus " + fixture_path("mini_zh.jsonl") + " --gold " +
                fixture_path("gold_chat.jsonl") + " --pred " +
                (ann / "annotations.jsonl").string() + " --out " + out.string()) == 0);
  auto report = json::parse(read_file((out / "agreement_report.json").string()));
  // frozen from tests/oracles/verify_fixtures.py
  CHECK(report["macro"]["precision"].get<double>() == doctest::Approx(0.9875).epsilon(1e-12));
  CHECK(report["macro"]["recall"].get<double>() == doctest::Approx(0.475).epsilon(1e-12));
  CHECK(report["macro"]["f1"].get<double>() ==
        doctest::Approx(0.4791666666666667).epsilon(1e-12));
}

TEST_CASE("agree prf rejects mixed taxonomies") {
  auto out = fresh("prf-bad");
  CHECK(run_cli("agree prf --corpus " + fixture_path("mini_zh.jsonl") + " --gold " +
                fixture_path("gold_standard.jsonl") + " --pred " + fixture_path("gold_chat.jsonl") +
                " --out " + out.string()) == 2);
}

TEST_CASE("global --out applies when the subcommand omits it") {
  auto out = fresh("global-out");
  CHECK(run_cli("--out " + out.string() + " ingest --input " + fixture_path("mini_zh.jsonl")) == 0);
  CHECK(fs::exists(out / "canonical.jsonl"));
}

TEST_CASE("agree system compares two score reports") {
  auto human = fresh("sys-human");
  auto machine = fresh("sys-auto");
  auto ann = fresh("sys-ann");
  REQUIRE(run_cli("autoannotate --corpus " + fixture_path("mini_zh.jsonl") + " --mock " +
                  fixture_path("mock_responses.json") + " --out " + ann.string()) == 0);
  REQUIRE(run_cli("score --corpus " + fixture_path("mini_zh.jsonl") + " --annotations " +
                  fixture_path("gold_chat.jsonl") + " --out " + human.string()) == 0);
  REQUIRE(run_cli("score --corpus " + fixture_path("mini_zh.jsonl") + " --annotations " +
                  (ann / "annotations.jsonl").string() + " --out " + machine.string()) == 0);

  auto out = fresh("sys-report");
  CHECK(run_cli("agree system --human " + (human / "score_report.json").string() + " --auto " +
                (machine / "score_report.json").string() + " --out " + out.string()) == 0);
  auto report = json::parse(read_file((out / "system_report.json").string()));
  CHECK(report["pairwise"]["total"].get<int>() == 12);  // 2 conditions x C(4,2)
  double acc = report["pairwise"]["accuracy"].get<double>();
  CHECK(acc >= 0.0);
  CHECK(acc <= 1.0);
  CHECK(report.contains("pearson"));
  CHECK(report["points"].size() == 8);
}

TEST_CASE("translate with the echo stub and exit 3 on partial failure") {
  auto out = fresh("translate");
  CHECK(run_cli("translate --corpus " + fixture_path("mini_zh.jsonl") +
                " --mock echo --system-id echo-sys --out " + out.string()) == 0);
  std::string mt = read_file((out / "mt.jsonl").string());
  CHECK(std::count(mt.begin(), mt.end(), '\n') == 10);

  // canned replies without a fallback leave most items failing
  auto partial = fresh("translate-partial");
  auto canned = partial / "canned.json";
  {
    std::ofstream f(canned);
    f << R"({"d01/gpt-4": "line"})";
  }
  CHECK(run_cli("autoannotate --corpus " + fixture_path("mini_zh.jsonl") + " --mock " +
                canned.string() + " --retries 0 --out " + partial.string()) == 3);
  auto manifest = json::parse(read_file((partial / "manifest.json").string()));
  CHECK(manifest["counts"]["failed"].get<int>() == 39);
  CHECK(manifest["failed_items"].size() == 39);
}

TEST_CASE("run-config file supplies defaults that flags override") {
  auto out = fresh("cfg");
  auto cfg_path = out / "run.json";
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"tau": 0.75})";
  }
  CHECK(run_cli("--config " + cfg_path.string() + " agree prf --corpus " +
                fixture_path("mini_zh.jsonl") + " --gold " + fixture_path("gold_chat.jsonl") +
                " --pred " + fixture_path("gold_chat.jsonl") + " --out " + out.string()) == 0);
  auto report = json::parse(read_file((out / "agreement_report.json").string()));
  CHECK(report["tau"].get<double>() == 0.75);

  CHECK(run_cli("--config " + cfg_path.string() + " agree prf --tau 0.25 --corpus " +
                fixture_path("mini_zh.jsonl") + " --gold " + fixture_path("gold_chat.jsonl") +
                " --pred " + fixture_path("gold_chat.jsonl") + " --out " + out.string()) == 0);
  report = json::parse(read_file((out / "agreement_report.json").string()));
  CHECK(report["tau"].get<double>() == 0.25);
}
