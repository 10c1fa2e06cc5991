#include "mqmchat/relabel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mqmchat/error.hpp"

namespace mqmchat {

double RelabelCell::relabeled_pct() const {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(relabeled) / static_cast<double>(total);
}

double RelabelCell::chat_specific_pct() const {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(chat_specific) / static_cast<double>(total);
}

RelabelReport relabel_report(const AnnotationSet& standard, const AnnotationSet& chat,
                             const TypeMapping& mapping, const MatchConfig& config,
                             const Corpus& corpus) {
  config.validate();
  mapping.validate();
  if (is_chat_kind(standard.kind))
    throw Error("relabel analysis needs a standard-taxonomy set, got " +
                std::string(to_string(standard.kind)));
  if (!is_chat_kind(chat.kind))
    throw Error("relabel analysis needs a chat-taxonomy set, got " + std::string(to_string(chat.kind)));

  std::set<std::string> excluded;
  for (const auto& [doc, flag] : standard.flags) excluded.insert(doc);
  for (const auto& [doc, flag] : chat.flags) excluded.insert(doc);

  // Chat candidates per (doc, system, turn), canonical order for stable
  // tie-breaking. Uncounted labels never participate.
  std::map<std::tuple<std::string, std::string, int>, std::vector<const Annotation*>> candidates;
  for (const auto& a : chat.annotations) {
    if (excluded.contains(a.doc_id)) continue;
    if (!is_counted(std::get<ChatErrorType>(a.label))) continue;
    candidates[{a.doc_id, a.system_id, a.turn}].push_back(&a);
  }
  for (auto& [key, list] : candidates)
    std::sort(list.begin(), list.end(),
              [](const Annotation* a, const Annotation* b) { return annotation_less(*a, *b); });

  std::map<std::tuple<std::string, LengthClass, std::string>, RelabelCell> cells;
  RelabelReport report;
  report.tau = config.tau;

  for (const auto& s : standard.annotations) {
    if (excluded.contains(s.doc_id)) continue;
    const ChatDocument* doc = corpus.find_document(s.doc_id);
    if (!doc) throw Error("standard annotation references unknown document " + s.doc_id);

    auto key = std::tuple(doc->lang_pair, doc->length_class, s.system_id);
    auto [it, inserted] = cells.try_emplace(key);
    if (inserted) {
      it->second.lang_pair = doc->lang_pair;
      it->second.length_class = doc->length_class;
      it->second.system_id = s.system_id;
    }
    RelabelCell& cell = it->second;
    ++cell.total;
    ++report.overall.total;

    const Annotation* best = nullptr;
    double best_ratio = 0;
    if (auto cit = candidates.find({s.doc_id, s.system_id, s.turn}); cit != candidates.end()) {
      for (const Annotation* c : cit->second) {
        double ratio = overlap_ratio(s, *c);
        if (ratio >= config.tau && ratio > best_ratio) {
          best = c;
          best_ratio = ratio;
        }
      }
    }
    if (!best) {
      ++cell.unmatched;
      ++report.overall.unmatched;
      continue;
    }

    const auto mapped = map_standard_to_chat(std::get<StandardErrorType>(s.label), mapping);
    const auto chat_label = std::get<ChatErrorType>(best->label);
    if (!mapped.contains(chat_label)) {
      ++cell.relabeled;
      ++report.overall.relabeled;
      if (is_chat_specific(chat_label)) {
        ++cell.chat_specific;
        ++report.overall.chat_specific;
      }
    }
  }

  for (auto& [key, cell] : cells) report.cells.push_back(std::move(cell));
  return report;
}

}  // namespace mqmchat
