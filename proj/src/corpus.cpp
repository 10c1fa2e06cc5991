#include "mqmchat/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mqmchat/error.hpp"
#include "mqmchat/unicode.hpp"

namespace mqmchat {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(LengthClass c) { return c == LengthClass::Short ? "short" : "long"; }

LengthClass length_class_from_string(std::string_view name) {
  if (name == "short") return LengthClass::Short;
  if (name == "long") return LengthClass::Long;
  throw Error("unknown length class: " + std::string(name));
}

std::string ChatDocument::source_lang() const {
  auto pos = lang_pair.find('-');
  if (pos == std::string::npos) throw Error("malformed language pair: " + lang_pair);
  return lang_pair.substr(0, pos);
}

std::string ChatDocument::target_lang() const {
  auto pos = lang_pair.find('-');
  if (pos == std::string::npos) throw Error("malformed language pair: " + lang_pair);
  return lang_pair.substr(pos + 1);
}

const ChatDocument* Corpus::find_document(const std::string& doc_id) const {
  auto it = doc_index_.find(doc_id);
  return it == doc_index_.end() ? nullptr : &documents[it->second];
}

const TranslationRecord* Corpus::find_translation(const std::string& doc_id,
                                                  const std::string& system_id) const {
  auto it = mt_index_.find({doc_id, system_id});
  return it == mt_index_.end() ? nullptr : &translations[it->second];
}

std::vector<std::string> Corpus::systems() const {
  std::set<std::string> seen;
  for (const auto& t : translations) seen.insert(t.system_id);
  return {seen.begin(), seen.end()};
}

void Corpus::rebuild_index() {
  doc_index_.clear();
  mt_index_.clear();
  for (std::size_t i = 0; i < documents.size(); ++i) doc_index_[documents[i].doc_id] = i;
  for (std::size_t i = 0; i < translations.size(); ++i)
    mt_index_[{translations[i].doc_id, translations[i].system_id}] = i;
}

void Corpus::finalize() {
  for (const auto& d : documents) {
    if (d.doc_id.empty()) throw Error("document with empty doc_id");
    if (d.turns.empty()) throw Error("document " + d.doc_id + " has no turns");
    for (const auto& t : d.turns)
      if (t.speaker.empty()) throw Error("document " + d.doc_id + " has a turn with empty speaker");
  }
  rebuild_index();
  if (doc_index_.size() != documents.size()) throw Error("duplicate doc_id in corpus");
  if (mt_index_.size() != translations.size())
    throw Error("duplicate (doc_id, system_id) translation in corpus");
  for (const auto& t : translations) {
    const ChatDocument* doc = find_document(t.doc_id);
    if (!doc) throw Error("translation for unknown document " + t.doc_id);
    if (!t.misaligned && t.turns.size() != doc->turns.size())
      throw Error("turn count mismatch for (" + t.doc_id + ", " + t.system_id + "): " +
                  std::to_string(t.turns.size()) + " translated vs " +
                  std::to_string(doc->turns.size()) + " source turns");
  }
}

namespace {

std::string locate(const std::string& origin, std::size_t line_no) {
  return origin + ":" + std::to_string(line_no);
}

ChatDocument parse_doc(const ordered_json& j, const std::string& where) {
  ChatDocument d;
  try {
    d.doc_id = j.at("doc_id").get<std::string>();
    d.lang_pair = j.at("lang_pair").get<std::string>();
    d.length_class = length_class_from_string(j.at("length_class").get<std::string>());
    for (const auto& t : j.at("turns")) {
      Turn turn;
      turn.speaker = t.at("speaker").get<std::string>();
      turn.text = t.at("text").get<std::string>();
      uni::scalar_length(turn.text);  // reject invalid UTF-8 up front
      d.turns.push_back(std::move(turn));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(where + ": bad doc record: " + e.what());
  }
  if (d.turns.empty()) throw Error(where + ": document " + d.doc_id + " has no turns");
  for (const auto& t : d.turns)
    if (t.speaker.empty()) throw Error(where + ": document " + d.doc_id + " has an empty speaker id");
  return d;
}

TranslationRecord parse_mt(const ordered_json& j, const std::string& where) {
  TranslationRecord r;
  try {
    r.doc_id = j.at("doc_id").get<std::string>();
    r.system_id = j.at("system_id").get<std::string>();
    for (const auto& t : j.at("turns")) {
      std::string text = t.get<std::string>();
      uni::scalar_length(text);
      r.turns.push_back(std::move(text));
    }
    if (j.contains("defect")) r.misaligned = j.at("defect").get<std::string>() == "misaligned";
  } catch (const nlohmann::json::exception& e) {
    throw Error(where + ": bad mt record: " + e.what());
  }
  return r;
}

}  // namespace

Corpus corpus_from_jsonl(std::string_view text, const std::string& origin) {
  Corpus corpus;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(locate(origin, line_no) + ": malformed JSON: " + e.what());
    }
    std::string rec = j.value("rec", "");
    const std::string where = locate(origin, line_no);
    if (rec == "doc") {
      corpus.documents.push_back(parse_doc(j, where));
    } else if (rec == "mt") {
      corpus.translations.push_back(parse_mt(j, where));
    } else {
      throw Error(where + ": unknown record type: '" + rec + "'");
    }
  }
  try {
    corpus.finalize();
  } catch (const Error& e) {
    throw Error(origin + ": " + e.what());
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return corpus_from_jsonl(buf.str(), path.filename().string());
}

std::string serialize_corpus(const Corpus& corpus) {
  std::vector<const ChatDocument*> docs;
  for (const auto& d : corpus.documents) docs.push_back(&d);
  std::sort(docs.begin(), docs.end(),
            [](const auto* a, const auto* b) { return a->doc_id < b->doc_id; });

  std::string out;
  for (const auto* d : docs) {
    ordered_json j;
    j["rec"] = "doc";
    j["doc_id"] = d->doc_id;
    j["lang_pair"] = d->lang_pair;
    j["length_class"] = std::string(to_string(d->length_class));
    auto& turns = j["turns"] = ordered_json::array();
    for (const auto& t : d->turns) {
      ordered_json turn;
      turn["speaker"] = t.speaker;
      turn["text"] = t.text;
      turns.push_back(std::move(turn));
    }
    out += j.dump();
    out += '\n';
  }
  out += serialize_translations(corpus.translations);
  return out;
}

std::string serialize_translations(const std::vector<TranslationRecord>& records) {
  std::vector<const TranslationRecord*> mts;
  for (const auto& t : records) mts.push_back(&t);
  std::sort(mts.begin(), mts.end(), [](const auto* a, const auto* b) {
    return std::tie(a->doc_id, a->system_id) < std::tie(b->doc_id, b->system_id);
  });
  std::string out;
  for (const auto* r : mts) {
    ordered_json j;
    j["rec"] = "mt";
    j["doc_id"] = r->doc_id;
    j["system_id"] = r->system_id;
    j["turns"] = r->turns;
    if (r->misaligned) j["defect"] = "misaligned";
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus file: " + path.string());
  out << serialize_corpus(corpus);
}

}  // namespace mqmchat
