#include "mqmchat/annotation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "mqmchat/error.hpp"
#include "mqmchat/unicode.hpp"

namespace mqmchat {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(SetKind k) {
  switch (k) {
    case SetKind::HumanChat: return "human_chat";
    case SetKind::HumanStandard: return "human_standard";
    case SetKind::AutoChat: return "auto_chat";
    case SetKind::AutoStandard: return "auto_standard";
  }
  throw Error("invalid SetKind");
}

SetKind set_kind_from_string(std::string_view name) {
  if (name == "human_chat") return SetKind::HumanChat;
  if (name == "human_standard") return SetKind::HumanStandard;
  if (name == "auto_chat") return SetKind::AutoChat;
  if (name == "auto_standard") return SetKind::AutoStandard;
  throw Error("unknown set kind: " + std::string(name));
}

bool is_chat_kind(SetKind k) { return k == SetKind::HumanChat || k == SetKind::AutoChat; }

SeverityScale scale_for(SetKind k) {
  return is_chat_kind(k) ? SeverityScale::Chat : SeverityScale::Standard;
}

bool annotation_less(const Annotation& a, const Annotation& b) {
  return std::tie(a.doc_id, a.system_id, a.turn, a.start, a.end) <
             std::tie(b.doc_id, b.system_id, b.turn, b.start, b.end) ||
         (std::tie(a.doc_id, a.system_id, a.turn, a.start, a.end) ==
              std::tie(b.doc_id, b.system_id, b.turn, b.start, b.end) &&
          std::tuple(label_to_string(a.label), a.severity.level, a.annotator) <
              std::tuple(label_to_string(b.label), b.severity.level, b.annotator));
}

namespace {

Annotation parse_ann(const ordered_json& j, SetKind kind, const std::string& where) {
  Annotation a;
  try {
    a.doc_id = j.at("doc_id").get<std::string>();
    a.system_id = j.at("system_id").get<std::string>();
    a.turn = j.at("turn").get<int>();
    a.start = j.at("start").get<std::size_t>();
    a.end = j.at("end").get<std::size_t>();
    a.label = label_from_string(j.at("label").get<std::string>(), is_chat_kind(kind));
    a.severity = severity_from_string(scale_for(kind), j.at("severity").get<std::string>());
    a.annotator = j.at("annotator").get<std::string>();
    if (j.contains("anchor")) a.omission_anchor = j.at("anchor").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(where + ": bad ann record: " + e.what());
  }
  if (a.turn < 0) throw Error(where + ": negative turn index");
  if (a.start > a.end) throw Error(where + ": span start exceeds end");
  if (a.start == a.end && !a.omission_anchor)
    throw Error(where + ": zero-width span without omission anchor flag");
  return a;
}

}  // namespace

std::vector<AnnotationSet> annotation_sets_from_jsonl(std::string_view text, const std::string& origin) {
  std::map<std::string, AnnotationSet> sets;
  std::vector<std::string> order;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  auto set_for = [&](const std::string& set_id, SetKind kind, const std::string& where) -> AnnotationSet& {
    auto [it, inserted] = sets.try_emplace(set_id);
    if (inserted) {
      it->second.set_id = set_id;
      it->second.kind = kind;
      order.push_back(set_id);
    } else if (it->second.kind != kind) {
      throw Error(where + ": set " + set_id + " mixes kinds " +
                  std::string(to_string(it->second.kind)) + " and " + std::string(to_string(kind)));
    }
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(where + ": malformed JSON: " + e.what());
    }
    std::string rec = j.value("rec", "");
    if (rec == "ann") {
      std::string set_id = j.at("set_id").get<std::string>();
      SetKind kind = set_kind_from_string(j.at("kind").get<std::string>());
      set_for(set_id, kind, where).annotations.push_back(parse_ann(j, kind, where));
    } else if (rec == "set") {
      // declares a (possibly empty) set; keeps empty sets representable
      std::string set_id = j.at("set_id").get<std::string>();
      SetKind kind = set_kind_from_string(j.at("kind").get<std::string>());
      set_for(set_id, kind, where);
    } else if (rec == "flag") {
      std::string set_id = j.at("set_id").get<std::string>();
      SetKind kind = set_kind_from_string(j.at("kind").get<std::string>());
      set_for(set_id, kind, where).flags[j.at("doc_id").get<std::string>()] =
          j.at("flag").get<std::string>();
    } else {
      throw Error(where + ": unknown record type: '" + rec + "'");
    }
  }

  std::vector<AnnotationSet> out;
  out.reserve(order.size());
  for (const auto& id : order) out.push_back(std::move(sets.at(id)));
  return out;
}

std::vector<AnnotationSet> load_annotation_sets(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open annotation file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return annotation_sets_from_jsonl(buf.str(), path.filename().string());
}

AnnotationSet load_annotation_set(const std::filesystem::path& path) {
  auto sets = load_annotation_sets(path);
  if (sets.size() != 1)
    throw Error(path.string() + ": expected exactly one annotation set, found " +
                std::to_string(sets.size()));
  return std::move(sets.front());
}

std::string serialize_annotation_set(const AnnotationSet& set) {
  if (set.annotations.empty() && set.flags.empty()) {
    ordered_json j;
    j["rec"] = "set";
    j["set_id"] = set.set_id;
    j["kind"] = std::string(to_string(set.kind));
    return j.dump() + "\n";
  }
  std::vector<const Annotation*> anns;
  anns.reserve(set.annotations.size());
  for (const auto& a : set.annotations) anns.push_back(&a);
  std::sort(anns.begin(), anns.end(),
            [](const auto* a, const auto* b) { return annotation_less(*a, *b); });

  std::string out;
  for (const auto* a : anns) {
    ordered_json j;
    j["rec"] = "ann";
    j["set_id"] = set.set_id;
    j["kind"] = std::string(to_string(set.kind));
    j["doc_id"] = a->doc_id;
    j["system_id"] = a->system_id;
    j["turn"] = a->turn;
    j["start"] = a->start;
    j["end"] = a->end;
    j["label"] = label_to_string(a->label);
    j["severity"] = std::string(to_string(a->severity.level));
    j["annotator"] = a->annotator;
    if (a->omission_anchor) j["anchor"] = true;
    out += j.dump();
    out += '\n';
  }
  for (const auto& [doc_id, flag] : set.flags) {
    ordered_json j;
    j["rec"] = "flag";
    j["set_id"] = set.set_id;
    j["kind"] = std::string(to_string(set.kind));
    j["doc_id"] = doc_id;
    j["flag"] = flag;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_annotation_set(const AnnotationSet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write annotation file: " + path.string());
  out << serialize_annotation_set(set);
}

std::string_view to_string(Violation::Level l) {
  return l == Violation::Level::Hard ? "hard" : "advisory";
}

namespace {

Violation make_violation(Violation::Level level, std::string code, std::string message,
                         const Annotation& a, std::size_t index) {
  Violation v;
  v.level = level;
  v.code = std::move(code);
  v.message = std::move(message);
  v.doc_id = a.doc_id;
  v.system_id = a.system_id;
  v.turn = a.turn;
  v.index = index;
  return v;
}

}  // namespace

std::vector<Violation> validate_annotations(const AnnotationSet& set, const Corpus& corpus) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < set.annotations.size(); ++i) {
    const Annotation& a = set.annotations[i];

    if (is_chat_label(a.label) != is_chat_kind(set.kind)) {
      out.push_back(make_violation(Violation::Level::Hard, "taxonomy-mismatch",
                                   "label " + label_to_string(a.label) + " does not belong to a " +
                                       std::string(to_string(set.kind)) + " set",
                                   a, i));
      continue;
    }
    if (a.severity.scale != scale_for(set.kind)) {
      out.push_back(make_violation(Violation::Level::Hard, "severity-scale-mismatch",
                                   "severity scale does not match set kind", a, i));
      continue;
    }

    const ChatDocument* doc = corpus.find_document(a.doc_id);
    if (!doc) {
      out.push_back(make_violation(Violation::Level::Hard, "unknown-document",
                                   "document " + a.doc_id + " not in corpus", a, i));
      continue;
    }
    const TranslationRecord* mt = corpus.find_translation(a.doc_id, a.system_id);
    if (!mt) {
      out.push_back(make_violation(Violation::Level::Hard, "unknown-translation",
                                   "no translation (" + a.doc_id + ", " + a.system_id + ")", a, i));
      continue;
    }
    if (a.turn < 0 || static_cast<std::size_t>(a.turn) >= mt->turns.size()) {
      out.push_back(make_violation(Violation::Level::Hard, "turn-out-of-range",
                                   "turn " + std::to_string(a.turn) + " out of range", a, i));
      continue;
    }

    const std::u32string text = uni::decode_utf8(mt->turns[a.turn]);
    if (a.start > a.end || a.end > text.size()) {
      out.push_back(make_violation(
          Violation::Level::Hard, "span-out-of-range",
          "span [" + std::to_string(a.start) + ", " + std::to_string(a.end) + ") exceeds turn length " +
              std::to_string(text.size()),
          a, i));
      continue;
    }
    if (a.start == a.end && !a.omission_anchor) {
      out.push_back(make_violation(Violation::Level::Hard, "zero-width-span",
                                   "zero-width span without omission anchor flag", a, i));
      continue;
    }

    if (a.start == 0 && a.end == text.size() && !text.empty()) {
      out.push_back(make_violation(Violation::Level::Advisory, "overly-broad-span",
                                   "span covers the entire turn", a, i));
    }

    // Single-word spans should not drag punctuation along. Spans that are
    // punctuation only are intentional and left alone.
    if (a.start < a.end) {
      std::u32string span = text.substr(a.start, a.end - a.start);
      std::size_t lo = 0, hi = span.size();
      while (lo < hi && uni::is_punct(span[lo])) ++lo;
      while (hi > lo && uni::is_punct(span[hi - 1])) --hi;
      bool padded = lo > 0 || hi < span.size();
      if (padded && lo < hi) {
        bool single_word = true;
        for (std::size_t k = lo; k < hi; ++k)
          if (uni::is_space(span[k])) {
            single_word = false;
            break;
          }
        if (single_word) {
          out.push_back(make_violation(Violation::Level::Advisory, "punctuation-padding",
                                       "single-word span padded with punctuation", a, i));
        }
      }
    }
  }
  return out;
}

bool has_hard_violation(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.level == Violation::Level::Hard; });
}

}  // namespace mqmchat
