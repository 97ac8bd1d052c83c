#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace eventweave {

/// A word sense rendered "lemma.pos.NN", e.g. "car.n.01". The lemma is the
/// first word of the synset; NN is that word's 1-based sense number.
struct SynsetId {
  std::string lemma;
  char pos = 'n';
  int sense = 1;

  std::string render() const;
  static std::optional<SynsetId> parse(const std::string& rendered);

  bool operator==(const SynsetId&) const = default;
};

/// True for strings shaped like a SynsetId rendering ("word.n.01").
bool looks_like_synset(const std::string& token);

/// In-memory index over the Princeton WordNet 3.x database files
/// (index.noun, data.noun, noun.exc and the verb equivalents).
/// Immutable after load; safe for concurrent reads.
class WordNetIndex {
 public:
  /// First (most frequent) sense of the lemma, or nullopt when unindexed.
  std::optional<SynsetId> first_synset(const std::string& lemma, char pos) const;

  /// Synset reached by walking `levels` hypernym edges from the lemma's first
  /// sense, taking the first hypernym at each step. Stops early rather than
  /// returning the noun root entity.n.01 or stepping past a chain top; the
  /// root is only returned when the lemma itself renders to it.
  std::optional<SynsetId> hypernym_ancestor(const std::string& lemma, char pos,
                                            int levels = 2) const;

  /// WordNet morphology: exception lists first, then detachment rules;
  /// the word itself wins when already indexed. nullopt when nothing applies.
  std::optional<std::string> lemmatize(const std::string& word, char pos) const;

  bool has_lemma(const std::string& lemma, char pos) const;

  std::size_t synset_count() const;

  struct Synset {
    std::vector<std::string> words;
    std::vector<std::uint64_t> hypernyms;  // offsets, file order
  };
  struct PosIndex {
    std::unordered_map<std::uint64_t, Synset> synsets;
    std::unordered_map<std::string, std::vector<std::uint64_t>> lemma_offsets;
    std::unordered_map<std::string, std::string> exceptions;
  };

 private:
  friend WordNetIndex load_wordnet(const std::string& dir);

  const PosIndex* pos_index(char pos) const;
  SynsetId render_synset(const PosIndex& idx, std::uint64_t offset, char pos) const;

  PosIndex nouns_;
  PosIndex verbs_;
};

/// Loads the standard database files from `dir`. Missing or corrupt files
/// raise std::runtime_error naming the offending file.
WordNetIndex load_wordnet(const std::string& dir);

}  // namespace eventweave
