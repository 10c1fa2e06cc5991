#include "mqmchat/stats.hpp"

#include <map>
#include <sstream>

#include "mqmchat/error.hpp"
#include "mqmchat/unicode.hpp"

namespace mqmchat {

std::vector<CorpusStatsRow> corpus_stats(const Corpus& corpus) {
  if (corpus.documents.empty()) throw Error("cannot compute statistics of an empty corpus");

  struct Acc {
    std::size_t chats = 0;
    std::size_t turns = 0;
    std::size_t source_chars = 0;
    std::size_t target_words = 0;
    std::size_t translated_chats = 0;
  };
  // key: (lang_pair, length_class, system_id); system "" holds source-side sums
  std::map<std::tuple<std::string, LengthClass, std::string>, Acc> acc;

  for (const auto& doc : corpus.documents) {
    Acc& a = acc[{doc.lang_pair, doc.length_class, ""}];
    ++a.chats;
    a.turns += doc.turns.size();
    for (const auto& t : doc.turns) a.source_chars += uni::scalar_length(t.text);
  }
  for (const auto& mt : corpus.translations) {
    const ChatDocument* doc = corpus.find_document(mt.doc_id);
    Acc& a = acc[{doc->lang_pair, doc->length_class, mt.system_id}];
    ++a.translated_chats;
    for (const auto& t : mt.turns) a.target_words += uni::whitespace_token_count(t);
  }

  std::vector<CorpusStatsRow> rows;
  for (const auto& [key, a] : acc) {
    const auto& [lang, length, system] = key;
    const Acc& src = acc.at({lang, length, ""});
    CorpusStatsRow row;
    row.lang_pair = lang;
    row.length_class = length;
    row.system_id = system;
    row.chats = system.empty() ? src.chats : a.translated_chats;
    row.avg_turns = static_cast<double>(src.turns) / static_cast<double>(src.chats);
    row.avg_source_chars = static_cast<double>(src.source_chars) / static_cast<double>(src.chats);
    row.avg_target_words =
        system.empty() ? 0.0 : static_cast<double>(a.target_words) / static_cast<double>(a.translated_chats);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string stats_to_csv(const std::vector<CorpusStatsRow>& rows) {
  std::ostringstream out;
  out << "lang_pair,length_class,system,chats,avg_turns,avg_source_chars,avg_target_words\n";
  for (const auto& r : rows) {
    out << r.lang_pair << ',' << to_string(r.length_class) << ',' << r.system_id << ',' << r.chats
        << ',' << r.avg_turns << ',' << r.avg_source_chars << ',' << r.avg_target_words << '\n';
  }
  return out.str();
}

}  // namespace mqmchat
