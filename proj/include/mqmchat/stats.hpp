#pragma once

#include <string>
#include <vector>

#include "mqmchat/corpus.hpp"

namespace mqmchat {

// Per (language pair, length class, system): chat count, mean turns, mean
// source scalar count, mean whitespace-token count of the translation.
struct CorpusStatsRow {
  std::string lang_pair;
  LengthClass length_class = LengthClass::Short;
  std::string system_id;
  std::size_t chats = 0;
  double avg_turns = 0;
  double avg_source_chars = 0;
  double avg_target_words = 0;
};

// Throws on an empty corpus.
std::vector<CorpusStatsRow> corpus_stats(const Corpus& corpus);

std::string stats_to_csv(const std::vector<CorpusStatsRow>& rows);

}  // namespace mqmchat
