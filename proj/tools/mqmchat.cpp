#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mqmchat/agreement.hpp"
#include "mqmchat/annotation.hpp"
#include "mqmchat/backend.hpp"
#include "mqmchat/cache.hpp"
#include "mqmchat/corpus.hpp"
#include "mqmchat/error.hpp"
#include "mqmchat/label_studio.hpp"
#include "mqmchat/mapping.hpp"
#include "mqmchat/relabel.hpp"
#include "mqmchat/run_config.hpp"
#include "mqmchat/runner.hpp"
#include "mqmchat/scoring.hpp"
#include "mqmchat/stats.hpp"
#include "mqmchat/system_agreement.hpp"
#include "mqmchat/unicode.hpp"

namespace {

using mqmchat::Error;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;    // input / validation errors
constexpr int kExitPartial = 3;  // partial backend failures

// Options resolve as: explicit flag > run-config value > built-in default.
struct ConfigDefaults {
  json values = json::object();

  void apply(const CLI::Option* opt, std::string& target, const char* key) const {
    if (opt->count() == 0 && values.contains(key)) target = values.at(key).get<std::string>();
  }
  void apply(const CLI::Option* opt, double& target, const char* key) const {
    if (opt->count() == 0 && values.contains(key)) target = values.at(key).get<double>();
  }
  void apply(const CLI::Option* opt, int& target, const char* key) const {
    if (opt->count() == 0 && values.contains(key)) target = values.at(key).get<int>();
  }
  void apply(const CLI::Option* opt, bool& target, const char* key) const {
    if (opt->count() == 0 && values.contains(key)) target = values.at(key).get<bool>();
  }
};

mqmchat::EvalConfig load_eval_config(const std::string& path) {
  if (path.empty()) return mqmchat::EvalConfig::defaults();
  return mqmchat::EvalConfig::load(path);
}

ordered_json violations_json(const std::vector<mqmchat::Violation>& violations,
                             const std::string& config_hash) {
  ordered_json out;
  out["config_hash"] = config_hash;
  long long hard = 0, advisory = 0;
  for (const auto& v : violations)
    (v.level == mqmchat::Violation::Level::Hard ? hard : advisory) += 1;
  out["hard"] = hard;
  out["advisory"] = advisory;
  auto& arr = out["violations"] = ordered_json::array();
  for (const auto& v : violations) {
    ordered_json j;
    j["level"] = std::string(to_string(v.level));
    j["code"] = v.code;
    j["message"] = v.message;
    j["doc_id"] = v.doc_id;
    j["system_id"] = v.system_id;
    j["turn"] = v.turn;
    j["index"] = v.index;
    arr.push_back(std::move(j));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// ingest
// ---------------------------------------------------------------------------

struct IngestArgs {
  std::string input;
  std::string format = "canonical";
  std::string kind = "human_chat";
  std::string offsets = "utf16";
  std::string set_id;
  std::string corpus;
  std::string eval_config;
  std::string out = "out";
};

int run_ingest(const IngestArgs& args) {
  mqmchat::RunContext ctx("ingest", args.out);
  ctx.add_input("input", args.input);
  if (!args.corpus.empty()) ctx.add_input("corpus", args.corpus);
  if (!args.eval_config.empty()) ctx.add_input("eval_config", args.eval_config);
  ctx.set_option("format", args.format);
  ctx.set_option("kind", args.kind);
  ctx.set_option("offsets", args.offsets);
  ctx.finalize();

  std::optional<mqmchat::AnnotationSet> set;
  if (args.format == "labelstudio") {
    mqmchat::LabelStudioOptions options;
    options.offsets = mqmchat::uni::offset_encoding_from_string(args.offsets);
    options.set_id = args.set_id;
    options.names = load_eval_config(args.eval_config).label_names;
    set = mqmchat::import_label_studio(args.input, mqmchat::set_kind_from_string(args.kind), options);
    ctx.write_text("canonical.jsonl", serialize_annotation_set(*set));
  } else if (args.format == "canonical") {
    // Corpus and annotation files share the JSONL envelope; dispatch on the
    // first record type.
    std::string text = read_file(args.input);
    auto first_rec = [&]() -> std::string {
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        return json::parse(line).value("rec", "");
      }
      throw Error(args.input + ": empty input file");
    }();
    if (first_rec == "doc" || first_rec == "mt") {
      mqmchat::Corpus corpus = mqmchat::corpus_from_jsonl(text, args.input);
      ctx.write_text("canonical.jsonl", serialize_corpus(corpus));
      ctx.write_text("validation.json", violations_json({}, ctx.hash()).dump(2) + "\n");
      return kExitOk;
    }
    auto sets = mqmchat::annotation_sets_from_jsonl(text, args.input);
    if (sets.size() != 1)
      throw Error(args.input + ": expected exactly one annotation set, found " +
                  std::to_string(sets.size()));
    set = std::move(sets.front());
    ctx.write_text("canonical.jsonl", serialize_annotation_set(*set));
  } else {
    throw Error("unknown ingest format: " + args.format);
  }

  std::vector<mqmchat::Violation> violations;
  if (!args.corpus.empty()) {
    mqmchat::Corpus corpus = mqmchat::load_corpus(args.corpus);
    violations = mqmchat::validate_annotations(*set, corpus);
  }
  ctx.write_text("validation.json", violations_json(violations, ctx.hash()).dump(2) + "\n");
  for (const auto& v : violations)
    std::cerr << to_string(v.level) << " " << v.code << ": " << v.message << " (" << v.doc_id << "/"
              << v.system_id << " turn " << v.turn << ")\n";
  return mqmchat::has_hard_violation(violations) ? kExitInput : kExitOk;
}

// ---------------------------------------------------------------------------
// score
// ---------------------------------------------------------------------------

struct ScoreArgs {
  std::string corpus;
  std::string annotations;
  std::string eval_config;
  std::string norm = "per-chat";
  double norm_scale = 0;
  std::string group_by = "system,type";
  std::string out = "out";
};

int run_score(const ScoreArgs& args) {
  mqmchat::RunContext ctx("score", args.out);
  ctx.add_input("corpus", args.corpus);
  ctx.add_input("annotations", args.annotations);
  if (!args.eval_config.empty()) ctx.add_input("eval_config", args.eval_config);
  ctx.set_option("norm", args.norm);
  ctx.set_option("norm_scale", args.norm_scale);
  ctx.set_option("group_by", args.group_by);
  ctx.finalize();

  mqmchat::Corpus corpus = mqmchat::load_corpus(args.corpus);
  mqmchat::AnnotationSet set = mqmchat::load_annotation_set(args.annotations);
  mqmchat::EvalConfig config = load_eval_config(args.eval_config);

  auto violations = mqmchat::validate_annotations(set, corpus);
  ctx.write_text("validation.json", violations_json(violations, ctx.hash()).dump(2) + "\n");
  if (mqmchat::has_hard_violation(violations)) {
    std::cerr << "annotation set failed validation; see validation.json\n";
    return kExitInput;
  }

  auto dims = mqmchat::parse_group_dims(args.group_by);
  auto counts = mqmchat::error_counts(set, corpus, dims, config);
  mqmchat::heatmap_export(counts, ctx.out("heatmap.csv"));

  mqmchat::ScoreOptions options;
  options.norm = mqmchat::normalization_from_string(args.norm);
  options.norm_scale = args.norm_scale;
  const auto& weights =
      is_chat_kind(set.kind) ? config.chat_weights : config.standard_weights;
  auto rows = mqmchat::oqs_report(set, corpus, weights, options);
  ctx.write_text("score_report.json",
                 score_report_json(rows, options, weights, ctx.hash()).dump(2) + "\n");

  ctx.write_text("stats.csv", stats_to_csv(corpus_stats(corpus)));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// agree prf | relabel | system
// ---------------------------------------------------------------------------

struct PrfArgs {
  std::string corpus;
  std::string gold;
  std::string pred;
  double tau = 0.5;
  std::string granularity = "span";
  bool skip_empty = false;
  int threads = 1;
  std::string out = "out";
};

int run_agree_prf(const PrfArgs& args) {
  mqmchat::RunContext ctx("agree-prf", args.out);
  ctx.add_input("corpus", args.corpus);
  ctx.add_input("gold", args.gold);
  ctx.add_input("pred", args.pred);
  ctx.set_option("tau", args.tau);
  ctx.set_option("granularity", args.granularity);
  ctx.set_option("skip_empty", args.skip_empty);
  ctx.finalize();

  mqmchat::Corpus corpus = mqmchat::load_corpus(args.corpus);
  mqmchat::AnnotationSet gold = mqmchat::load_annotation_set(args.gold);
  mqmchat::AnnotationSet pred = mqmchat::load_annotation_set(args.pred);
  if (is_chat_kind(gold.kind) != is_chat_kind(pred.kind)) {
    std::cerr << "gold and predicted sets use different taxonomies\n";
    return kExitInput;
  }
  for (const auto* set : {&gold, &pred}) {
    if (mqmchat::has_hard_violation(mqmchat::validate_annotations(*set, corpus))) {
      std::cerr << "set " << set->set_id << " failed validation\n";
      return kExitInput;
    }
  }

  mqmchat::PrfOptions options;
  options.match.tau = args.tau;
  options.match.granularity = mqmchat::granularity_from_string(args.granularity);
  options.include_empty_documents = !args.skip_empty;
  options.threads = args.threads;

  std::vector<std::pair<std::string, std::string>> universe;
  for (const auto& mt : corpus.translations) universe.emplace_back(mt.doc_id, mt.system_id);
  auto report = mqmchat::prf_report(gold, pred, options, &universe);

  ordered_json j;
  j["config_hash"] = ctx.hash();
  j["tau"] = args.tau;
  j["granularity"] = args.granularity;
  j["include_empty_documents"] = !args.skip_empty;
  j["macro"]["precision"] = report.macro.precision;
  j["macro"]["recall"] = report.macro.recall;
  j["macro"]["f1"] = report.macro.f1;
  auto& docs = j["documents"] = ordered_json::array();
  for (const auto& d : report.documents) {
    ordered_json row;
    row["doc_id"] = d.doc_id;
    row["system_id"] = d.system_id;
    row["gold"] = d.gold_count;
    row["pred"] = d.pred_count;
    row["matched"] = d.matched;
    row["precision"] = d.triple.precision;
    row["recall"] = d.triple.recall;
    row["f1"] = d.triple.f1;
    docs.push_back(std::move(row));
  }
  ctx.write_text("agreement_report.json", j.dump(2) + "\n");
  std::cout << "macro P=" << report.macro.precision << " R=" << report.macro.recall
            << " F1=" << report.macro.f1 << " over " << report.documents.size() << " items\n";
  return kExitOk;
}

struct RelabelArgs {
  std::string corpus;
  std::string standard;
  std::string chat;
  double tau = 0.5;
  std::string eval_config;
  std::string out = "out";
};

int run_agree_relabel(const RelabelArgs& args) {
  mqmchat::RunContext ctx("agree-relabel", args.out);
  ctx.add_input("corpus", args.corpus);
  ctx.add_input("standard", args.standard);
  ctx.add_input("chat", args.chat);
  if (!args.eval_config.empty()) ctx.add_input("eval_config", args.eval_config);
  ctx.set_option("tau", args.tau);
  ctx.finalize();

  mqmchat::Corpus corpus = mqmchat::load_corpus(args.corpus);
  mqmchat::AnnotationSet standard = mqmchat::load_annotation_set(args.standard);
  mqmchat::AnnotationSet chat = mqmchat::load_annotation_set(args.chat);
  mqmchat::EvalConfig config = load_eval_config(args.eval_config);

  mqmchat::MatchConfig match;
  match.tau = args.tau;
  auto report = mqmchat::relabel_report(standard, chat, config.mapping, match, corpus);

  auto cell_json = [](const mqmchat::RelabelCell& c, bool with_key) {
    ordered_json j;
    if (with_key) {
      j["lang_pair"] = c.lang_pair;
      j["length_class"] = std::string(to_string(c.length_class));
      j["system"] = c.system_id;
    }
    j["total"] = c.total;
    j["relabeled"] = c.relabeled;
    j["relabeled_pct"] = c.relabeled_pct();
    j["chat_specific"] = c.chat_specific;
    j["chat_specific_pct"] = c.chat_specific_pct();
    j["unmatched"] = c.unmatched;
    return j;
  };

  ordered_json j;
  j["config_hash"] = ctx.hash();
  j["tau"] = report.tau;
  auto& cells = j["cells"] = ordered_json::array();
  for (const auto& c : report.cells) cells.push_back(cell_json(c, true));
  j["overall"] = cell_json(report.overall, false);
  ctx.write_text("relabel_report.json", j.dump(2) + "\n");
  std::cout << "relabeled " << report.overall.relabeled << "/" << report.overall.total << " ("
            << report.overall.relabeled_pct() << "%), chat-specific " << report.overall.chat_specific
            << " (" << report.overall.chat_specific_pct() << "%)\n";
  return kExitOk;
}

struct SystemArgs {
  std::string human;
  std::string automatic;
  std::string tie_policy = "both-tie-concordant";
  std::string out = "out";
};

int run_agree_system(const SystemArgs& args) {
  mqmchat::RunContext ctx("agree-system", args.out);
  ctx.add_input("human", args.human);
  ctx.add_input("auto", args.automatic);
  ctx.set_option("tie_policy", args.tie_policy);
  ctx.finalize();

  auto human_rows = mqmchat::score_rows_from_json(json::parse(read_file(args.human)));
  auto auto_rows = mqmchat::score_rows_from_json(json::parse(read_file(args.automatic)));

  std::map<std::tuple<std::string, std::string, std::string>, double> auto_by;
  for (const auto& r : auto_rows)
    auto_by[{r.lang_pair, std::string(to_string(r.length_class)), r.system_id}] = r.oqs;

  std::vector<mqmchat::SystemScore> scores;
  std::vector<double> hv, av;
  for (const auto& r : human_rows) {
    auto key = std::tuple(r.lang_pair, std::string(to_string(r.length_class)), r.system_id);
    auto it = auto_by.find(key);
    if (it == auto_by.end())
      throw Error("auto report lacks row (" + r.lang_pair + ", " +
                  std::string(to_string(r.length_class)) + ", " + r.system_id + ")");
    mqmchat::SystemScore s;
    s.condition = r.lang_pair + "|" + std::string(to_string(r.length_class));
    s.system = r.system_id;
    s.human = r.oqs;
    s.automatic = it->second;
    scores.push_back(s);
    hv.push_back(s.human);
    av.push_back(s.automatic);
  }

  mqmchat::TiePolicy policy;
  if (args.tie_policy == "strict-ties")
    policy.both_tie_concordant = false;
  else if (args.tie_policy != "both-tie-concordant")
    throw Error("unknown tie policy: " + args.tie_policy);

  auto pairwise = mqmchat::pairwise_accuracy(scores, policy);
  double r = mqmchat::pearson(hv, av);

  ordered_json j;
  j["config_hash"] = ctx.hash();
  j["tie_policy"] = args.tie_policy;
  j["pairwise"]["concordant"] = pairwise.concordant;
  j["pairwise"]["total"] = pairwise.total;
  j["pairwise"]["accuracy"] = pairwise.value;
  j["pearson"] = r;
  auto& points = j["points"] = ordered_json::array();
  for (const auto& s : scores) {
    ordered_json p;
    p["condition"] = s.condition;
    p["system"] = s.system;
    p["human"] = s.human;
    p["auto"] = s.automatic;
    points.push_back(std::move(p));
  }
  ctx.write_text("system_report.json", j.dump(2) + "\n");
  std::cout << "pairwise accuracy " << pairwise.value << " (" << pairwise.concordant << "/"
            << pairwise.total << "), pearson " << r << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// autoannotate / translate
// ---------------------------------------------------------------------------

struct BackendArgs {
  std::string mock;
  std::string endpoint;
  std::string model = "gpt-4";
  std::string cache;
  std::string auth_header = "Authorization";
  int concurrency = 1;
  int retries = 3;
  double temperature = 0;
  double top_p = 1.0;
  int max_tokens = 500;
};

mqmchat::BackendConfig backend_config(const BackendArgs& args) {
  mqmchat::BackendConfig config;
  config.endpoint = args.endpoint;
  config.model = args.model;
  config.params.temperature = args.temperature;
  config.params.top_p = args.top_p;
  config.params.max_tokens = args.max_tokens;
  config.max_concurrency = args.concurrency;
  config.max_retries = args.retries;
  config.auth_header = args.auth_header;
  config.cache_dir = args.cache;
  return config;
}

std::unique_ptr<mqmchat::Backend> make_backend(const BackendArgs& args,
                                               const mqmchat::BackendConfig& config) {
  if (!args.mock.empty()) return mqmchat::make_mock_backend(args.mock);
  if (args.endpoint.empty()) throw Error("either --mock or --endpoint is required");
  return mqmchat::make_http_backend(config);
}

struct AutoAnnotateArgs {
  std::string corpus;
  std::string set_id = "auto-chat";
  std::string fewshot;
  std::string prompt_template;
  BackendArgs backend;
  std::string out = "out";
};

int run_autoannotate(const AutoAnnotateArgs& args) {
  mqmchat::RunContext ctx("autoannotate", args.out);
  ctx.add_input("corpus", args.corpus);
  if (!args.fewshot.empty()) ctx.add_input("fewshot", args.fewshot);
  if (!args.prompt_template.empty()) ctx.add_input("prompt_template", args.prompt_template);
  ctx.set_option("model", args.backend.model);
  ctx.set_option("mock", args.backend.mock);
  ctx.set_option("set_id", args.set_id);
  ctx.finalize();

  mqmchat::Corpus corpus = mqmchat::load_corpus(args.corpus);
  auto config = backend_config(args.backend);
  auto backend = make_backend(args.backend, config);
  mqmchat::ResponseCache cache(config.cache_dir);

  mqmchat::AnnotateOptions options;
  options.set_id = args.set_id;
  if (!args.fewshot.empty()) options.fewshot = mqmchat::load_fewshot(args.fewshot);
  if (!args.prompt_template.empty())
    options.prompt = mqmchat::PromptTemplate::load(args.prompt_template);

  auto result = mqmchat::annotate_batch(corpus, *backend, cache, config, options);
  ctx.write_text("annotations.jsonl", serialize_annotation_set(result.set));
  ctx.write_text("manifest.json", result.manifest.to_json().dump(2) + "\n");
  std::cout << "items " << result.manifest.counts.items << ", cached "
            << result.manifest.counts.cached << ", requested " << result.manifest.counts.requested
            << ", failed " << result.manifest.counts.failed << ", annotations "
            << result.set.annotations.size() << "\n";
  return result.manifest.counts.failed > 0 ? kExitPartial : kExitOk;
}

struct TranslateArgs {
  std::string corpus;
  std::string system_id;
  BackendArgs backend;
  std::string out = "out";
};

int run_translate(const TranslateArgs& args) {
  mqmchat::RunContext ctx("translate", args.out);
  ctx.add_input("corpus", args.corpus);
  ctx.set_option("model", args.backend.model);
  ctx.set_option("mock", args.backend.mock);
  ctx.set_option("system_id", args.system_id);
  ctx.finalize();

  mqmchat::Corpus corpus = mqmchat::load_corpus(args.corpus);
  auto config = backend_config(args.backend);
  auto backend = make_backend(args.backend, config);
  mqmchat::ResponseCache cache(config.cache_dir);

  mqmchat::TranslateOptions options;
  options.system_id = args.system_id;
  auto result = mqmchat::translate_batch(corpus, *backend, cache, config, options);
  ctx.write_text("mt.jsonl", mqmchat::serialize_translations(result.records));
  ctx.write_text("manifest.json", result.manifest.to_json().dump(2) + "\n");
  std::cout << "items " << result.manifest.counts.items << ", misaligned "
            << result.manifest.counts.misaligned << ", failed " << result.manifest.counts.failed
            << "\n";
  return result.manifest.counts.failed > 0 ? kExitPartial : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MQM-Chat evaluation toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "Run-config JSON supplying flag defaults");
  std::string global_out;
  app.add_option("--out", global_out, "Output directory (subcommand --out takes precedence)");
  ConfigDefaults defaults;

  IngestArgs ingest;
  auto* cmd_ingest = app.add_subcommand("ingest", "Normalize corpora and annotation exports");
  auto* in_input = cmd_ingest->add_option("--input", ingest.input, "Input file")->required();
  auto* in_format = cmd_ingest->add_option("--format", ingest.format, "canonical|labelstudio");
  auto* in_kind = cmd_ingest->add_option("--kind", ingest.kind, "Annotation set kind");
  auto* in_offsets = cmd_ingest->add_option("--offsets", ingest.offsets, "scalar|utf16|utf8");
  cmd_ingest->add_option("--set-id", ingest.set_id, "Set id for imported annotations");
  auto* in_corpus = cmd_ingest->add_option("--corpus", ingest.corpus, "Corpus for validation");
  auto* in_cfg = cmd_ingest->add_option("--eval-config", ingest.eval_config, "Mapping/weights config");
  auto* in_out = cmd_ingest->add_option("--out", ingest.out, "Output directory");

  ScoreArgs score;
  auto* cmd_score = app.add_subcommand("score", "Error counts, heatmap CSV and OQS report");
  cmd_score->add_option("--corpus", score.corpus, "Corpus JSONL")->required();
  cmd_score->add_option("--annotations", score.annotations, "Annotation JSONL")->required();
  auto* sc_cfg = cmd_score->add_option("--eval-config", score.eval_config, "Mapping/weights config");
  auto* sc_norm = cmd_score->add_option("--norm", score.norm, "per-chat|per-word");
  auto* sc_scale = cmd_score->add_option("--norm-scale", score.norm_scale, "Penalty capacity scale");
  auto* sc_group = cmd_score->add_option("--group-by", score.group_by,
                                         "Count dimensions, e.g. system,type");
  auto* sc_out = cmd_score->add_option("--out", score.out, "Output directory");

  auto* cmd_agree = app.add_subcommand("agree", "Agreement analytics");
  cmd_agree->require_subcommand(1);

  PrfArgs prf;
  auto* cmd_prf = cmd_agree->add_subcommand("prf", "Span-matching precision/recall/F1");
  cmd_prf->add_option("--corpus", prf.corpus, "Corpus JSONL")->required();
  cmd_prf->add_option("--gold", prf.gold, "Gold annotation set")->required();
  cmd_prf->add_option("--pred", prf.pred, "Predicted annotation set")->required();
  auto* pr_tau = cmd_prf->add_option("--tau", prf.tau, "Overlap ratio threshold");
  auto* pr_gran = cmd_prf->add_option("--granularity", prf.granularity,
                                      "span|span_label|span_severity");
  cmd_prf->add_flag("--skip-empty", prf.skip_empty, "Drop items empty on both sides");
  auto* pr_threads = cmd_prf->add_option("--threads", prf.threads, "Worker threads (0 = auto)");
  auto* pr_out = cmd_prf->add_option("--out", prf.out, "Output directory");

  RelabelArgs relabel;
  auto* cmd_relabel = cmd_agree->add_subcommand("relabel", "Standard-vs-chat relabel analysis");
  cmd_relabel->add_option("--corpus", relabel.corpus, "Corpus JSONL")->required();
  cmd_relabel->add_option("--standard", relabel.standard, "Standard-taxonomy set")->required();
  cmd_relabel->add_option("--chat", relabel.chat, "Chat-taxonomy set")->required();
  auto* rl_tau = cmd_relabel->add_option("--tau", relabel.tau, "Overlap ratio threshold");
  auto* rl_cfg = cmd_relabel->add_option("--eval-config", relabel.eval_config,
                                         "Mapping/weights config");
  auto* rl_out = cmd_relabel->add_option("--out", relabel.out, "Output directory");

  SystemArgs system_args;
  auto* cmd_system = cmd_agree->add_subcommand("system", "Pairwise accuracy and Pearson");
  cmd_system->add_option("--human", system_args.human, "Human score report JSON")->required();
  cmd_system->add_option("--auto", system_args.automatic, "Auto score report JSON")->required();
  auto* sy_tie = cmd_system->add_option("--tie-policy", system_args.tie_policy,
                                        "both-tie-concordant|strict-ties");
  auto* sy_out = cmd_system->add_option("--out", system_args.out, "Output directory");

  AutoAnnotateArgs autoann;
  auto* cmd_auto = app.add_subcommand("autoannotate", "LLM-backed MQM-Chat annotation");
  cmd_auto->add_option("--corpus", autoann.corpus, "Corpus JSONL")->required();
  cmd_auto->add_option("--set-id", autoann.set_id, "Output set id");
  auto* au_fewshot = cmd_auto->add_option("--fewshot", autoann.fewshot, "Few-shot examples JSON");
  auto* au_template = cmd_auto->add_option("--prompt-template", autoann.prompt_template,
                                           "Custom annotation prompt template JSON");
  auto* au_mock = cmd_auto->add_option("--mock", autoann.backend.mock,
                                       "Deterministic stub backend (no_error|echo|<file>.json)");
  auto* au_endpoint = cmd_auto->add_option("--endpoint", autoann.backend.endpoint, "Backend URL");
  auto* au_model = cmd_auto->add_option("--model", autoann.backend.model, "Model name");
  auto* au_cache = cmd_auto->add_option("--cache", autoann.backend.cache, "Response cache directory");
  cmd_auto->add_option("--auth-header", autoann.backend.auth_header, "Auth header name");
  cmd_auto->add_option("--concurrency", autoann.backend.concurrency, "Max in-flight requests");
  cmd_auto->add_option("--retries", autoann.backend.retries, "Retry budget");
  cmd_auto->add_option("--temperature", autoann.backend.temperature, "Sampling temperature");
  cmd_auto->add_option("--top-p", autoann.backend.top_p, "Sampling top_p");
  cmd_auto->add_option("--max-tokens", autoann.backend.max_tokens, "Completion token cap");
  auto* au_out = cmd_auto->add_option("--out", autoann.out, "Output directory");

  TranslateArgs translate;
  translate.backend.temperature = 1.0;  // translation-run default
  auto* cmd_translate = app.add_subcommand("translate", "Batch chat translation");
  cmd_translate->add_option("--corpus", translate.corpus, "Corpus JSONL")->required();
  cmd_translate->add_option("--system-id", translate.system_id, "System id for output records");
  auto* tr_mock = cmd_translate->add_option("--mock", translate.backend.mock,
                                            "Deterministic stub backend");
  auto* tr_endpoint = cmd_translate->add_option("--endpoint", translate.backend.endpoint,
                                                "Backend URL");
  auto* tr_model = cmd_translate->add_option("--model", translate.backend.model, "Model name");
  auto* tr_cache = cmd_translate->add_option("--cache", translate.backend.cache,
                                             "Response cache directory");
  cmd_translate->add_option("--auth-header", translate.backend.auth_header, "Auth header name");
  cmd_translate->add_option("--concurrency", translate.backend.concurrency, "Max in-flight requests");
  cmd_translate->add_option("--retries", translate.backend.retries, "Retry budget");
  cmd_translate->add_option("--temperature", translate.backend.temperature, "Sampling temperature");
  cmd_translate->add_option("--top-p", translate.backend.top_p, "Sampling top_p");
  cmd_translate->add_option("--max-tokens", translate.backend.max_tokens, "Completion token cap");
  auto* tr_out = cmd_translate->add_option("--out", translate.out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) defaults.values = mqmchat::load_run_config(config_path);
    auto resolve_out = [&](const CLI::Option* opt, std::string& target) {
      defaults.apply(opt, target, "out");
      if (opt->count() == 0 && !global_out.empty()) target = global_out;
    };

    if (cmd_ingest->parsed()) {
      defaults.apply(in_input, ingest.input, "input");
      defaults.apply(in_format, ingest.format, "format");
      defaults.apply(in_kind, ingest.kind, "kind");
      defaults.apply(in_offsets, ingest.offsets, "offsets");
      defaults.apply(in_corpus, ingest.corpus, "corpus");
      defaults.apply(in_cfg, ingest.eval_config, "eval_config");
      resolve_out(in_out, ingest.out);
      return run_ingest(ingest);
    }
    if (cmd_score->parsed()) {
      defaults.apply(sc_cfg, score.eval_config, "eval_config");
      defaults.apply(sc_norm, score.norm, "norm");
      defaults.apply(sc_scale, score.norm_scale, "norm_scale");
      defaults.apply(sc_group, score.group_by, "group_by");
      resolve_out(sc_out, score.out);
      return run_score(score);
    }
    if (cmd_agree->parsed()) {
      if (cmd_prf->parsed()) {
        defaults.apply(pr_tau, prf.tau, "tau");
        defaults.apply(pr_gran, prf.granularity, "granularity");
        defaults.apply(pr_threads, prf.threads, "threads");
        resolve_out(pr_out, prf.out);
        return run_agree_prf(prf);
      }
      if (cmd_relabel->parsed()) {
        defaults.apply(rl_tau, relabel.tau, "tau");
        defaults.apply(rl_cfg, relabel.eval_config, "eval_config");
        resolve_out(rl_out, relabel.out);
        return run_agree_relabel(relabel);
      }
      if (cmd_system->parsed()) {
        defaults.apply(sy_tie, system_args.tie_policy, "tie_policy");
        resolve_out(sy_out, system_args.out);
        return run_agree_system(system_args);
      }
    }
    if (cmd_auto->parsed()) {
      defaults.apply(au_fewshot, autoann.fewshot, "fewshot");
      defaults.apply(au_template, autoann.prompt_template, "prompt_template");
      defaults.apply(au_mock, autoann.backend.mock, "mock");
      defaults.apply(au_endpoint, autoann.backend.endpoint, "endpoint");
      defaults.apply(au_model, autoann.backend.model, "model");
      defaults.apply(au_cache, autoann.backend.cache, "cache");
      resolve_out(au_out, autoann.out);
      return run_autoannotate(autoann);
    }
    if (cmd_translate->parsed()) {
      defaults.apply(tr_mock, translate.backend.mock, "mock");
      defaults.apply(tr_endpoint, translate.backend.endpoint, "endpoint");
      defaults.apply(tr_model, translate.backend.model, "model");
      defaults.apply(tr_cache, translate.backend.cache, "cache");
      resolve_out(tr_out, translate.out);
      return run_translate(translate);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
