#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eventweave/corpus.hpp"
#include "eventweave/event.hpp"
#include "eventweave/verbnet.hpp"
#include "eventweave/wordnet.hpp"

namespace eventweave {

/// An event in original-word form plus the 1-based source token index behind
/// each slot (0 for EmptyParameter), so later abstraction can consult the
/// parse for POS and NER tags.
struct ExtractedEvent {
  Event event;
  std::array<int, 4> slot_token = {0, 0, 0, 0};  // s, v, o, m
};

/// A maximal run of contiguous PERSON-tagged tokens.
struct PersonMention {
  int head_token = 0;   // first token of the run
  int last_token = 0;
  std::string name;     // surface forms, underscore-joined ("Remus_Lupin")
};

/// PERSON mentions in sentence order.
std::vector<PersonMention> person_mentions(const ParsedSentence& sentence);

/// The mention containing `token_index`, if any.
std::optional<PersonMention> mention_at(const ParsedSentence& sentence, int token_index);

/// Extracts the <s,v,o,m> events of a sentence in original-word form.
/// One event per clausal verb (the root verb and verbs attached by
/// conj/ccomp/advcl/parataxis); a conjoined subject multiplies the event per
/// conjunct. Slot fillers are lowercased lemmas; missing object/modifier
/// slots hold EmptyParameter. Verbless sentences yield no events.
std::vector<ExtractedEvent> extract_events(const ParsedSentence& sentence);

/// Fixed pronoun abstractions used by the generalized representation.
/// Returns nullopt for pronouns that are kept as-is (I, you, ...).
std::optional<std::string> pronoun_abstraction(const std::string& word);

/// Applies the configured abstraction to one extracted event.
/// ORIGINAL is the identity; ORIGINAL_WITH_NE replaces PERSON fillers with
/// <NE>n via the table; GENERALIZED additionally maps other named entities to
/// their NER category, nouns to their hypernym ancestor, pronouns via the
/// fixed table, and verbs to VerbNet classes. Lexicon misses keep the lemma,
/// and values that already look generalized are left untouched.
Event generalize_event(const ExtractedEvent& extracted, const ParsedSentence& sentence,
                       const RepresentationConfig& config, NeTable& ne_table,
                       const WordNetIndex* wn, const VerbNetIndex* vn);

/// Seeds `table` with the sentence's PERSON mentions in occurrence order.
void intern_sentence_mentions(const ParsedSentence& sentence, NeTable& table);

}  // namespace eventweave
