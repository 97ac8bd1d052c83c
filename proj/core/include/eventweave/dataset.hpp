#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eventweave/corpus.hpp"
#include "eventweave/event.hpp"
#include "eventweave/lda.hpp"
#include "eventweave/pairs.hpp"
#include "eventweave/verbnet.hpp"
#include "eventweave/wordnet.hpp"

namespace eventweave {

/// Event-to-event training conditions, numbered like the experiment list.
enum class E2ECondition {
  kOriginalSentences = 0,
  kOriginalWords = 1,
  kOriginalWithNe = 2,
  kGeneralized = 3,
  kGeneralizedContNe = 4,
  kGeneralizedGenre = 5,
  kGeneralizedBigram = 6,
  kGeneralizedBigramContNe = 7,
  kGeneralizedBigramGenre = 8,
  kMultiSequential = 9,
  kMultiAnyOrder = 10,
  kMultiAllToAll = 11,
};

/// Event-to-sentence training conditions.
enum class E2SCondition {
  kOrigEventToOrigSent = 0,
  kGenEventToGenSent = 1,
  kAllGenEventsToGenSent = 2,
  kOrigEventToSpSent = 3,
  kGenEventToSpGenSent = 4,
  kAllGenEventsToSpGenSent = 5,
};

std::string condition_name(E2ECondition condition);
std::string condition_name(E2SCondition condition);
std::optional<E2ECondition> parse_e2e_condition(int number);
std::optional<E2SCondition> parse_e2s_condition(int number);
bool condition_uses_genre(E2ECondition condition);
bool condition_is_generalized(E2ECondition condition);

struct DatasetInputs {
  const WordNetIndex* wordnet = nullptr;
  const VerbNetIndex* verbnet = nullptr;
  const TopicModel* genre_model = nullptr;
};

struct DatasetStats {
  std::size_t sentences_seen = 0;
  std::size_t events_extracted = 0;
  std::size_t permutation_guard_skips = 0;  // condition 10, > 6 events
};

/// Events per sentence above this count are skipped by the any-order
/// permutation condition instead of exploding factorially.
inline constexpr std::size_t kPermutationGuard = 6;

/// Builds the training pairs for one event-to-event condition. Conditions
/// 0-8 use the first event per sentence; 9-11 use all of them. Pairs never
/// cross a story boundary; output order is canonical (story, sentence,
/// permutation). Generalized conditions require lexicons, genre conditions a
/// topic model; both raise std::invalid_argument when missing.
std::vector<SequencePair> build_e2e(const Corpus& corpus, E2ECondition condition,
                                    const DatasetInputs& inputs,
                                    DatasetStats* stats = nullptr);

/// Builds event -> sentence pairs for one event-to-sentence condition. S+P
/// conditions split-and-prune first and eventify the fragments; fragments
/// (or sentences) yielding no events contribute nothing.
std::vector<SequencePair> build_e2s(const Corpus& corpus, E2SCondition condition,
                                    const DatasetInputs& inputs,
                                    DatasetStats* stats = nullptr);

}  // namespace eventweave
