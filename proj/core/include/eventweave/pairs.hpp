#pragma once

#include <string>
#include <vector>

namespace eventweave {

/// One training example: input token sequence -> output token sequence.
struct SequencePair {
  std::vector<std::string> input;
  std::vector<std::string> output;
  std::string story_id;
  int sentence = 0;  // index of the input sentence
  int variant = 0;   // permutation / fragment counter within a sentence

  bool operator==(const SequencePair& other) const {
    return input == other.input && output == other.output;
  }
};

/// Sidecar metadata written next to a pair file.
struct PairsManifest {
  std::string kind;        // "e2e" or "e2s"
  int condition = -1;
  std::string condition_name;
  std::size_t pair_count = 0;
  bool strip_genre = false;
  int slots_per_event = 4;
};

std::string join_tokens(const std::vector<std::string>& tokens);
std::vector<std::string> split_tokens(const std::string& text);

/// Two-column TSV, "input<TAB>output", one pair per line, UTF-8.
void save_pairs_tsv(const std::vector<SequencePair>& pairs, const std::string& path);
std::vector<SequencePair> load_pairs_tsv(const std::string& path);

void save_manifest(const PairsManifest& manifest, const std::string& path);
PairsManifest load_manifest(const std::string& path);

}  // namespace eventweave
