#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eventweave/corpus.hpp"
#include "eventweave/event.hpp"
#include "eventweave/wordnet.hpp"

namespace eventweave {

/// A partially generalized sentence: PERSON names -> <NE>n, other named
/// entities -> their NER category, nouns -> hypernym synsets; verbs and
/// function words untouched. Carries the tables needed to invert itself.
struct GeneralizedSentence {
  struct NounOccurrence {
    int position = 0;         // 0-based index into tokens
    std::string placeholder;  // rendered SynsetId or NER category word
    std::string original;     // surface form it replaced
  };

  std::vector<std::string> tokens;
  NeTable ne_table;
  std::vector<NounOccurrence> noun_table;

  /// Exact inversion via the positional tables.
  std::vector<std::string> restore() const;
};

/// Most-recent name per <NE> index and noun per synset id, kept across one
/// pipeline step so generated placeholders can be filled back in.
class WorkingMemory {
 public:
  void observe_name(int index, const std::string& name);
  void observe_noun(const std::string& synset, const std::string& noun);
  void ingest(const GeneralizedSentence& sentence);

  std::optional<std::string> name_for(int index) const;
  std::optional<std::string> noun_for(const std::string& synset) const;
  bool empty() const { return names_.empty() && nouns_.empty(); }

 private:
  std::unordered_map<int, std::string> names_;
  std::unordered_map<std::string, std::string> nouns_;
};

/// Surface tokens with each contiguous PERSON run merged to one
/// underscore-joined token; the comparison target for restore/fill.
std::vector<std::string> merged_surface_tokens(const ParsedSentence& sentence);

/// Partially generalizes a parsed, NER-tagged sentence. Multiword PERSON
/// names are merged to a single <NE> token first, so substitution is 1:1.
/// Nouns missing from WordNet keep their surface form. When `shared_table`
/// is given the NE numbering continues across calls (pair scope).
GeneralizedSentence generalize_sentence(const ParsedSentence& sentence, const WordNetIndex* wn,
                                        NeTable* shared_table = nullptr);

/// Replaces <NE>n tags and synset or NER-category tokens in a generated
/// sequence using the working memory. Unresolved names become "someone";
/// unresolved synsets fall back to their own head lemma (underscores as
/// spaces, re-tokenized). The fallback for an unknown <NE> index is recorded
/// in the memory so later steps stay consistent.
std::vector<std::string> fill_placeholders(const std::vector<std::string>& generated,
                                           WorkingMemory& memory);

}  // namespace eventweave
