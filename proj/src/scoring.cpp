#include "mqmchat/scoring.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mqmchat/error.hpp"
#include "mqmchat/unicode.hpp"

namespace mqmchat {

GroupDim group_dim_from_string(std::string_view name) {
  if (name == "lang" || name == "lang_pair") return GroupDim::LangPair;
  if (name == "length" || name == "length_class") return GroupDim::LengthClass;
  if (name == "system") return GroupDim::System;
  if (name == "type" || name == "error_type") return GroupDim::ErrorType;
  if (name == "severity") return GroupDim::Severity;
  throw Error("unknown grouping dimension: " + std::string(name));
}

std::string_view to_string(GroupDim d) {
  switch (d) {
    case GroupDim::LangPair: return "lang_pair";
    case GroupDim::LengthClass: return "length_class";
    case GroupDim::System: return "system";
    case GroupDim::ErrorType: return "type";
    case GroupDim::Severity: return "severity";
  }
  throw Error("invalid GroupDim");
}

std::vector<GroupDim> parse_group_dims(std::string_view csv) {
  std::vector<GroupDim> dims;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    std::string_view item = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos
                                                                            : comma - pos);
    if (!item.empty()) dims.push_back(group_dim_from_string(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (dims.empty()) throw Error("empty grouping dimension list");
  std::set<GroupDim> seen(dims.begin(), dims.end());
  if (seen.size() != dims.size()) throw Error("duplicate grouping dimension");
  return dims;
}

namespace {

std::vector<std::string> ordered_systems(const Corpus& corpus, const EvalConfig& config) {
  std::vector<std::string> observed = corpus.systems();
  std::vector<std::string> out;
  for (const auto& s : config.system_order)
    if (std::find(observed.begin(), observed.end(), s) != observed.end()) out.push_back(s);
  for (const auto& s : observed)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

// Value universe for one dimension, canonical order.
std::vector<std::string> dim_values(GroupDim dim, const AnnotationSet& set, const Corpus& corpus,
                                    const EvalConfig& config) {
  switch (dim) {
    case GroupDim::LangPair: {
      std::set<std::string> langs;
      for (const auto& d : corpus.documents) langs.insert(d.lang_pair);
      return {langs.begin(), langs.end()};
    }
    case GroupDim::LengthClass:
      return {"short", "long"};
    case GroupDim::System:
      return ordered_systems(corpus, config);
    case GroupDim::ErrorType: {
      std::vector<std::string> out;
      if (is_chat_kind(set.kind)) {
        for (auto t : kChatErrorColumns) out.emplace_back(to_string(t));
      } else {
        for (const auto& l : all_standard_labels()) out.push_back(to_string(l));
      }
      return out;
    }
    case GroupDim::Severity: {
      std::vector<std::string> out;
      if (scale_for(set.kind) == SeverityScale::Standard) out.emplace_back("critical");
      out.emplace_back("major");
      out.emplace_back("minor");
      out.emplace_back("neutral");
      return out;
    }
  }
  throw Error("invalid GroupDim");
}

std::string dim_value_of(GroupDim dim, const Annotation& a, const ChatDocument& doc) {
  switch (dim) {
    case GroupDim::LangPair: return doc.lang_pair;
    case GroupDim::LengthClass: return std::string(to_string(doc.length_class));
    case GroupDim::System: return a.system_id;
    case GroupDim::ErrorType: return label_to_string(a.label);
    case GroupDim::Severity: return std::string(to_string(a.severity.level));
  }
  throw Error("invalid GroupDim");
}

}  // namespace

CountMatrix error_counts(const AnnotationSet& set, const Corpus& corpus,
                         const std::vector<GroupDim>& dims, const EvalConfig& config) {
  if (dims.empty()) throw Error("empty grouping dimension list");

  CountMatrix matrix;
  matrix.dims = dims;

  std::vector<std::vector<std::string>> universes;
  for (GroupDim d : dims) universes.push_back(dim_values(d, set, corpus, config));

  std::size_t rows = 1;
  for (const auto& u : universes) rows *= u.size();
  matrix.keys.reserve(rows);
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::string> key;
    key.reserve(dims.size());
    for (std::size_t d = 0; d < dims.size(); ++d) key.push_back(universes[d][idx[d]]);
    matrix.keys.push_back(std::move(key));
    for (std::size_t d = dims.size(); d-- > 0;) {
      if (++idx[d] < universes[d].size()) break;
      idx[d] = 0;
    }
  }
  matrix.counts.assign(rows, 0);

  std::map<std::vector<std::string>, std::size_t> row_of;
  for (std::size_t r = 0; r < rows; ++r) row_of[matrix.keys[r]] = r;

  for (const auto& a : set.annotations) {
    if (const auto* chat = std::get_if<ChatErrorType>(&a.label); chat && !is_counted(*chat)) continue;
    if (set.excluded(a.doc_id)) continue;
    const ChatDocument* doc = corpus.find_document(a.doc_id);
    if (!doc) throw Error("annotation references unknown document " + a.doc_id);
    std::vector<std::string> key;
    key.reserve(dims.size());
    for (GroupDim d : dims) key.push_back(dim_value_of(d, a, *doc));
    auto it = row_of.find(key);
    if (it == row_of.end()) throw Error("annotation outside the corpus grouping universe");
    ++matrix.counts[it->second];
    ++matrix.total;
  }
  return matrix;
}

std::string heatmap_to_csv(const CountMatrix& matrix) {
  if (matrix.dims.empty()) throw Error("cannot export an empty matrix");

  // Column axis: distinct values of the last dimension, in first-seen
  // (canonical) order.
  std::vector<std::string> columns;
  for (const auto& key : matrix.keys) {
    const std::string& v = key.back();
    if (std::find(columns.begin(), columns.end(), v) == columns.end()) columns.push_back(v);
  }

  std::ostringstream out;
  for (std::size_t d = 0; d + 1 < matrix.dims.size(); ++d) {
    out << to_string(matrix.dims[d]) << ',';
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << columns[c];
    out << (c + 1 < columns.size() ? ',' : '\n');
  }

  const std::size_t ncols = columns.size();
  for (std::size_t r = 0; r < matrix.keys.size(); r += ncols) {
    for (std::size_t d = 0; d + 1 < matrix.dims.size(); ++d) out << matrix.keys[r][d] << ',';
    for (std::size_t c = 0; c < ncols; ++c) {
      out << matrix.counts[r + c];
      out << (c + 1 < ncols ? ',' : '\n');
    }
  }
  return out.str();
}

void heatmap_export(const CountMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write heatmap file: " + path.string());
  out << heatmap_to_csv(matrix);
  if (!out) throw Error("failed writing heatmap file: " + path.string());
}

Normalization normalization_from_string(std::string_view name) {
  if (name == "per-word" || name == "per_word") return Normalization::PerWord;
  if (name == "per-chat" || name == "per_chat") return Normalization::PerChat;
  throw Error("unknown normalization: " + std::string(name));
}

std::string_view to_string(Normalization n) {
  return n == Normalization::PerWord ? "per-word" : "per-chat";
}

double ScoreOptions::effective_scale() const {
  if (norm_scale > 0) return norm_scale;
  return norm == Normalization::PerWord ? kDefaultPerWordScale : kDefaultPerChatScale;
}

std::vector<ScoreRow> oqs_report(const AnnotationSet& set, const Corpus& corpus,
                                 const SeverityWeights& weights, const ScoreOptions& options) {
  weights.validate();
  if (weights.scale != scale_for(set.kind))
    throw Error("severity weights scale does not match the annotation set kind");

  struct Slice {
    long long ec = 0;
    double penalty = 0;
    double words = 0;
    double chats = 0;
  };
  std::map<std::tuple<std::string, LengthClass, std::string>, Slice> slices;

  for (const auto& mt : corpus.translations) {
    if (set.excluded(mt.doc_id)) continue;
    const ChatDocument* doc = corpus.find_document(mt.doc_id);
    Slice& s = slices[{doc->lang_pair, doc->length_class, mt.system_id}];
    s.chats += 1;
    for (const auto& t : mt.turns) s.words += static_cast<double>(uni::whitespace_token_count(t));
  }
  for (const auto& a : set.annotations) {
    if (const auto* chat = std::get_if<ChatErrorType>(&a.label); chat && !is_counted(*chat)) continue;
    if (set.excluded(a.doc_id)) continue;
    const ChatDocument* doc = corpus.find_document(a.doc_id);
    if (!doc) throw Error("annotation references unknown document " + a.doc_id);
    auto it = slices.find({doc->lang_pair, doc->length_class, a.system_id});
    if (it == slices.end())
      throw Error("annotation references unknown translation (" + a.doc_id + ", " + a.system_id + ")");
    ++it->second.ec;
    it->second.penalty += severity_weight(a.severity, weights);
  }

  const double scale = options.effective_scale();
  std::vector<ScoreRow> rows;
  for (const auto& [key, s] : slices) {
    ScoreRow row;
    std::tie(row.lang_pair, row.length_class, row.system_id) = key;
    row.ec = s.ec;
    row.penalty = s.penalty;
    row.denom = options.norm == Normalization::PerWord ? s.words : s.chats;
    if (row.denom <= 0)
      throw Error("zero denominator for (" + row.lang_pair + ", " +
                  std::string(to_string(row.length_class)) + ", " + row.system_id + ")");
    double score = 100.0 * (1.0 - s.penalty / (scale * row.denom));
    row.oqs = std::max(0.0, score);
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json score_report_json(const std::vector<ScoreRow>& rows,
                                         const ScoreOptions& options, const SeverityWeights& weights,
                                         const std::string& config_hash) {
  nlohmann::ordered_json j;
  j["config_hash"] = config_hash;
  j["oqs_formula"] = std::string(kOqsFormulaVersion);
  j["norm"] = std::string(to_string(options.norm));
  j["norm_scale"] = options.effective_scale();
  nlohmann::ordered_json w;
  if (weights.scale == SeverityScale::Standard) w["critical"] = weights.critical;
  w["major"] = weights.major;
  w["minor"] = weights.minor;
  w["neutral"] = weights.neutral;
  j["weights"] = std::move(w);
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["lang_pair"] = r.lang_pair;
    row["length_class"] = std::string(to_string(r.length_class));
    row["system"] = r.system_id;
    row["ec"] = r.ec;
    row["penalty"] = r.penalty;
    row["oqs"] = r.oqs;
    row["denom"] = r.denom;
    arr.push_back(std::move(row));
  }
  return j;
}

std::vector<ScoreRow> score_rows_from_json(const nlohmann::json& report) {
  std::vector<ScoreRow> rows;
  try {
    for (const auto& row : report.at("rows")) {
      ScoreRow r;
      r.lang_pair = row.at("lang_pair").get<std::string>();
      r.length_class = length_class_from_string(row.at("length_class").get<std::string>());
      r.system_id = row.at("system").get<std::string>();
      r.ec = row.at("ec").get<long long>();
      r.penalty = row.at("penalty").get<double>();
      r.oqs = row.at("oqs").get<double>();
      r.denom = row.at("denom").get<double>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed score report: ") + e.what());
  }
  return rows;
}

}  // namespace mqmchat
