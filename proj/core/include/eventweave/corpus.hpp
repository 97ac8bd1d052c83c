#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eventweave {

/// One token of a dependency-parsed sentence. `head` is the 1-based index of
/// the syntactic head, 0 for the root. `ner` is "O" for untagged tokens.
struct Token {
  int index = 0;
  std::string surface;
  std::string lemma;
  std::string upos;
  int head = 0;
  std::string deprel;
  std::string ner = "O";

  bool operator==(const Token&) const = default;
};

struct ParsedSentence {
  std::vector<Token> tokens;
  std::string story_id;
  int position = 0;  // 0-based index within the story
  std::string raw_text;

  bool operator==(const ParsedSentence&) const = default;

  const Token* token_at(int index) const;  // 1-based, nullptr if out of range
  std::vector<int> children_of(int head_index) const;  // in token order
};

struct Story {
  std::string id;
  std::vector<ParsedSentence> sentences;

  bool operator==(const Story&) const = default;
};

struct Corpus {
  std::vector<Story> stories;

  bool operator==(const Corpus&) const = default;

  std::size_t sentence_count() const;
};

struct CorpusSplit {
  Corpus train;
  Corpus validation;
  Corpus test;
};

/// Deterministic by-story 80/10/10 split. Validation and test each receive
/// floor(N/10) stories, the remainder goes to train. Same seed, same split.
/// Throws std::invalid_argument for corpora with fewer than 10 stories.
CorpusSplit split_corpus(const Corpus& corpus, std::uint64_t seed);

void save_corpus(const Corpus& corpus, std::ostream& out);
void save_corpus_file(const Corpus& corpus, const std::string& path);
Corpus load_corpus(std::istream& in);
Corpus load_corpus_file(const std::string& path);

}  // namespace eventweave
