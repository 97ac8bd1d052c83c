#include "eventweave/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "eventweave/eventify.hpp"
#include "eventweave/sentgen.hpp"
#include "eventweave/splitprune.hpp"

namespace eventweave {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Condition 0 operates on plain sentence streams: lowercased non-punctuation
// surface tokens.
std::vector<std::string> sentence_tokens(const ParsedSentence& sentence) {
  std::vector<std::string> out;
  for (const Token& t : sentence.tokens) {
    if (t.upos == "PUNCT") continue;
    out.push_back(lower(t.surface));
  }
  return out;
}

struct SentenceEvents {
  const ParsedSentence* sentence = nullptr;
  std::vector<ExtractedEvent> events;
};

std::vector<SentenceEvents> story_events(const Story& story, DatasetStats* stats) {
  std::vector<SentenceEvents> out;
  for (const ParsedSentence& sentence : story.sentences) {
    SentenceEvents se;
    se.sentence = &sentence;
    se.events = extract_events(sentence);
    if (stats != nullptr) {
      ++stats->sentences_seen;
      stats->events_extracted += se.events.size();
    }
    out.push_back(std::move(se));
  }
  return out;
}

void require_lexicons(const DatasetInputs& inputs, const std::string& what) {
  if (inputs.wordnet == nullptr || inputs.verbnet == nullptr)
    throw std::invalid_argument(what + ": generalized condition needs WordNet and VerbNet");
}

}  // namespace

std::string condition_name(E2ECondition condition) {
  switch (condition) {
    case E2ECondition::kOriginalSentences: return "Original Sentences";
    case E2ECondition::kOriginalWords: return "Original Words Baseline";
    case E2ECondition::kOriginalWithNe: return "Original Words with <NE>s";
    case E2ECondition::kGeneralized: return "Generalized Baseline";
    case E2ECondition::kGeneralizedContNe: return "Generalized, Continued NEs";
    case E2ECondition::kGeneralizedGenre: return "Generalized + Genre";
    case E2ECondition::kGeneralizedBigram: return "Generalized Bigram";
    case E2ECondition::kGeneralizedBigramContNe: return "Generalized Bigram, Cont. NEs";
    case E2ECondition::kGeneralizedBigramGenre: return "Generalized Bigram + Genre";
    case E2ECondition::kMultiSequential: return "Generalized Multiple, Sequential";
    case E2ECondition::kMultiAnyOrder: return "Generalized Multiple, Any Order";
    case E2ECondition::kMultiAllToAll: return "Generalized Multiple, All to All";
  }
  return "?";
}

std::string condition_name(E2SCondition condition) {
  switch (condition) {
    case E2SCondition::kOrigEventToOrigSent: return "Original Words Event -> Original Sentence";
    case E2SCondition::kGenEventToGenSent: return "Generalized Event -> Generalized Sentence";
    case E2SCondition::kAllGenEventsToGenSent: return "All Generalized Events -> Gen. Sentence";
    case E2SCondition::kOrigEventToSpSent: return "Original Words Event -> S+P Sentence";
    case E2SCondition::kGenEventToSpGenSent: return "Generalized Event -> S+P Gen. Sentence";
    case E2SCondition::kAllGenEventsToSpGenSent: return "All Generalized Events -> S+P Gen. Sent.";
  }
  return "?";
}

std::optional<E2ECondition> parse_e2e_condition(int number) {
  if (number < 0 || number > 11) return std::nullopt;
  return static_cast<E2ECondition>(number);
}

std::optional<E2SCondition> parse_e2s_condition(int number) {
  if (number < 0 || number > 5) return std::nullopt;
  return static_cast<E2SCondition>(number);
}

bool condition_uses_genre(E2ECondition condition) {
  return condition == E2ECondition::kGeneralizedGenre ||
         condition == E2ECondition::kGeneralizedBigramGenre;
}

bool condition_is_generalized(E2ECondition condition) {
  return static_cast<int>(condition) >= 3;
}

namespace {

// Renders one event under the condition's word mode, interning PERSON names
// through the given table, with an optional genre id as a fifth token.
std::vector<std::string> event_tokens(const ExtractedEvent& extracted,
                                      const ParsedSentence& sentence, WordMode mode,
                                      NeTable& table, const DatasetInputs& inputs,
                                      std::optional<int> genre) {
  RepresentationConfig config;
  config.word_mode = mode;
  config.include_genre = genre.has_value();
  Event event = generalize_event(extracted, sentence, config, table, inputs.wordnet,
                                 inputs.verbnet);
  event.genre = genre;
  return event.tokens();
}

struct ChainEntry {
  const ParsedSentence* sentence = nullptr;
  const ExtractedEvent* event = nullptr;
};

// First event of every event-bearing sentence, story order.
std::vector<ChainEntry> first_event_chain(const std::vector<SentenceEvents>& sentences) {
  std::vector<ChainEntry> chain;
  for (const SentenceEvents& se : sentences)
    if (!se.events.empty()) chain.push_back({se.sentence, &se.events.front()});
  return chain;
}

std::vector<SequencePair> build_e2e_story(const Story& story, E2ECondition condition,
                                          const DatasetInputs& inputs, DatasetStats* stats) {
  std::vector<SequencePair> pairs;
  const auto sentences = story_events(story, stats);

  std::optional<int> genre;
  if (condition_uses_genre(condition))
    genre = assign_genre(story, *inputs.genre_model);

  const bool generalized = condition_is_generalized(condition);
  const WordMode mode = !generalized ? (condition == E2ECondition::kOriginalWithNe
                                            ? WordMode::kOriginalWithNe
                                            : WordMode::kOriginal)
                                     : WordMode::kGeneralized;

  auto make_pair = [&](const ParsedSentence* at, int variant) {
    SequencePair p;
    p.story_id = story.id;
    p.sentence = at != nullptr ? at->position : 0;
    p.variant = variant;
    return p;
  };

  switch (condition) {
    case E2ECondition::kOriginalSentences: {
      std::vector<const ParsedSentence*> nonempty;
      for (const SentenceEvents& se : sentences)
        if (!sentence_tokens(*se.sentence).empty()) nonempty.push_back(se.sentence);
      for (std::size_t i = 0; i + 1 < nonempty.size(); ++i) {
        SequencePair p = make_pair(nonempty[i], 0);
        p.input = sentence_tokens(*nonempty[i]);
        p.output = sentence_tokens(*nonempty[i + 1]);
        pairs.push_back(std::move(p));
      }
      break;
    }

    case E2ECondition::kOriginalWords:
    case E2ECondition::kOriginalWithNe:
    case E2ECondition::kGeneralized:
    case E2ECondition::kGeneralizedContNe:
    case E2ECondition::kGeneralizedGenre: {
      const bool continued = condition == E2ECondition::kGeneralizedContNe;
      const auto chain = first_event_chain(sentences);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        SequencePair p = make_pair(chain[i].sentence, 0);
        if (continued) {
          // One table across the input-output pair; names shared by both
          // sentences keep one index.
          NeTable table;
          intern_sentence_mentions(*chain[i].sentence, table);
          intern_sentence_mentions(*chain[i + 1].sentence, table);
          p.input = event_tokens(*chain[i].event, *chain[i].sentence, mode, table, inputs, genre);
          p.output =
              event_tokens(*chain[i + 1].event, *chain[i + 1].sentence, mode, table, inputs, genre);
        } else {
          NeTable in_table, out_table;
          intern_sentence_mentions(*chain[i].sentence, in_table);
          intern_sentence_mentions(*chain[i + 1].sentence, out_table);
          p.input =
              event_tokens(*chain[i].event, *chain[i].sentence, mode, in_table, inputs, genre);
          p.output = event_tokens(*chain[i + 1].event, *chain[i + 1].sentence, mode, out_table,
                                  inputs, genre);
        }
        pairs.push_back(std::move(p));
      }
      break;
    }

    case E2ECondition::kGeneralizedBigram:
    case E2ECondition::kGeneralizedBigramContNe:
    case E2ECondition::kGeneralizedBigramGenre: {
      const bool continued = condition == E2ECondition::kGeneralizedBigramContNe;
      const auto chain = first_event_chain(sentences);
      // Sliding window: events n-1, n predict events n+1, n+2.
      for (std::size_t n = 1; n + 2 < chain.size(); ++n) {
        SequencePair p = make_pair(chain[n].sentence, 0);
        std::array<const ChainEntry*, 4> window = {&chain[n - 1], &chain[n], &chain[n + 1],
                                                   &chain[n + 2]};
        if (continued) {
          NeTable table;
          for (const ChainEntry* e : window) intern_sentence_mentions(*e->sentence, table);
          for (int w = 0; w < 4; ++w) {
            auto toks =
                event_tokens(*window[w]->event, *window[w]->sentence, mode, table, inputs, genre);
            auto& dest = w < 2 ? p.input : p.output;
            dest.insert(dest.end(), toks.begin(), toks.end());
          }
        } else {
          for (int w = 0; w < 4; ++w) {
            NeTable table;
            intern_sentence_mentions(*window[w]->sentence, table);
            auto toks =
                event_tokens(*window[w]->event, *window[w]->sentence, mode, table, inputs, genre);
            auto& dest = w < 2 ? p.input : p.output;
            dest.insert(dest.end(), toks.begin(), toks.end());
          }
        }
        pairs.push_back(std::move(p));
      }
      break;
    }

    case E2ECondition::kMultiSequential: {
      // Every event in story order; each predicts its successor.
      struct Flat {
        const ParsedSentence* sentence;
        const ExtractedEvent* event;
      };
      std::vector<Flat> flat;
      for (const SentenceEvents& se : sentences)
        for (const ExtractedEvent& e : se.events) flat.push_back({se.sentence, &e});
      for (std::size_t i = 0; i + 1 < flat.size(); ++i) {
        SequencePair p = make_pair(flat[i].sentence, 0);
        NeTable in_table, out_table;
        intern_sentence_mentions(*flat[i].sentence, in_table);
        intern_sentence_mentions(*flat[i + 1].sentence, out_table);
        p.input = event_tokens(*flat[i].event, *flat[i].sentence, mode, in_table, inputs, genre);
        p.output =
            event_tokens(*flat[i + 1].event, *flat[i + 1].sentence, mode, out_table, inputs, genre);
        pairs.push_back(std::move(p));
      }
      break;
    }

    case E2ECondition::kMultiAnyOrder: {
      std::vector<const SentenceEvents*> bearing;
      for (const SentenceEvents& se : sentences)
        if (!se.events.empty()) bearing.push_back(&se);
      for (std::size_t i = 0; i + 1 < bearing.size(); ++i) {
        const SentenceEvents& a = *bearing[i];
        const SentenceEvents& b = *bearing[i + 1];
        if (a.events.size() > kPermutationGuard || b.events.size() > kPermutationGuard) {
          if (stats != nullptr) ++stats->permutation_guard_skips;
          continue;
        }
        auto render_all = [&](const SentenceEvents& se,
                              const std::vector<std::size_t>& order) {
          NeTable table;
          intern_sentence_mentions(*se.sentence, table);
          std::vector<std::string> toks;
          for (std::size_t idx : order) {
            auto t = event_tokens(se.events[idx], *se.sentence, mode, table, inputs, genre);
            toks.insert(toks.end(), t.begin(), t.end());
          }
          return toks;
        };
        std::vector<std::size_t> order_a(a.events.size());
        std::iota(order_a.begin(), order_a.end(), 0);
        int variant = 0;
        do {
          std::vector<std::size_t> order_b(b.events.size());
          std::iota(order_b.begin(), order_b.end(), 0);
          do {
            SequencePair p = make_pair(a.sentence, variant++);
            p.input = render_all(a, order_a);
            p.output = render_all(b, order_b);
            pairs.push_back(std::move(p));
          } while (std::next_permutation(order_b.begin(), order_b.end()));
        } while (std::next_permutation(order_a.begin(), order_a.end()));
      }
      break;
    }

    case E2ECondition::kMultiAllToAll: {
      std::vector<const SentenceEvents*> bearing;
      for (const SentenceEvents& se : sentences)
        if (!se.events.empty()) bearing.push_back(&se);
      for (std::size_t i = 0; i + 1 < bearing.size(); ++i) {
        auto render_all = [&](const SentenceEvents& se) {
          NeTable table;
          intern_sentence_mentions(*se.sentence, table);
          std::vector<std::string> toks;
          for (const ExtractedEvent& e : se.events) {
            auto t = event_tokens(e, *se.sentence, mode, table, inputs, genre);
            toks.insert(toks.end(), t.begin(), t.end());
          }
          return toks;
        };
        SequencePair p = make_pair(bearing[i]->sentence, 0);
        p.input = render_all(*bearing[i]);
        p.output = render_all(*bearing[i + 1]);
        pairs.push_back(std::move(p));
      }
      break;
    }
  }
  return pairs;
}

}  // namespace

std::vector<SequencePair> build_e2e(const Corpus& corpus, E2ECondition condition,
                                    const DatasetInputs& inputs, DatasetStats* stats) {
  if (condition_uses_genre(condition) && inputs.genre_model == nullptr)
    throw std::invalid_argument("build_e2e: condition " +
                                std::to_string(static_cast<int>(condition)) +
                                " needs a genre model");
  if (condition_is_generalized(condition)) require_lexicons(inputs, "build_e2e");

  std::vector<SequencePair> pairs;
  for (const Story& story : corpus.stories) {
    auto story_pairs = build_e2e_story(story, condition, inputs, stats);
    pairs.insert(pairs.end(), std::make_move_iterator(story_pairs.begin()),
                 std::make_move_iterator(story_pairs.end()));
  }
  return pairs;
}

namespace {

bool e2s_generalized(E2SCondition c) {
  return c == E2SCondition::kGenEventToGenSent || c == E2SCondition::kAllGenEventsToGenSent ||
         c == E2SCondition::kGenEventToSpGenSent ||
         c == E2SCondition::kAllGenEventsToSpGenSent;
}

bool e2s_split_prune(E2SCondition c) {
  return c == E2SCondition::kOrigEventToSpSent || c == E2SCondition::kGenEventToSpGenSent ||
         c == E2SCondition::kAllGenEventsToSpGenSent;
}

bool e2s_all_events(E2SCondition c) {
  return c == E2SCondition::kAllGenEventsToGenSent ||
         c == E2SCondition::kAllGenEventsToSpGenSent;
}

std::vector<std::string> surface_tokens(const ParsedSentence& sentence) {
  std::vector<std::string> out;
  out.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) out.push_back(t.surface);
  return out;
}

// One pair per (sentence or fragment): its event(s) against its token stream.
void emit_e2s_unit(const ParsedSentence& unit, E2SCondition condition,
                   const DatasetInputs& inputs, const std::string& story_id, int sentence_pos,
                   int variant, DatasetStats* stats, std::vector<SequencePair>* pairs) {
  std::vector<ExtractedEvent> events = extract_events(unit);
  if (stats != nullptr) {
    ++stats->sentences_seen;
    stats->events_extracted += events.size();
  }
  if (events.empty()) return;

  SequencePair p;
  p.story_id = story_id;
  p.sentence = sentence_pos;
  p.variant = variant;

  if (!e2s_generalized(condition)) {
    p.input = events.front().event.tokens();
    p.output = surface_tokens(unit);
    pairs->push_back(std::move(p));
    return;
  }

  // Event slots and the sentence share one NE table so indices line up.
  NeTable table;
  GeneralizedSentence generalized = generalize_sentence(unit, inputs.wordnet, &table);
  RepresentationConfig config;
  config.word_mode = WordMode::kGeneralized;
  const std::size_t take = e2s_all_events(condition) ? events.size() : 1;
  for (std::size_t i = 0; i < take; ++i) {
    Event ev = generalize_event(events[i], unit, config, table, inputs.wordnet, inputs.verbnet);
    auto toks = ev.tokens();
    p.input.insert(p.input.end(), toks.begin(), toks.end());
  }
  p.output = generalized.tokens;
  pairs->push_back(std::move(p));
}

}  // namespace

std::vector<SequencePair> build_e2s(const Corpus& corpus, E2SCondition condition,
                                    const DatasetInputs& inputs, DatasetStats* stats) {
  if (e2s_generalized(condition)) require_lexicons(inputs, "build_e2s");

  std::vector<SequencePair> pairs;
  for (const Story& story : corpus.stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      if (e2s_split_prune(condition)) {
        const auto fragments = split_and_prune(sentence);
        for (const SentenceFragment& frag : fragments)
          emit_e2s_unit(frag.sentence, condition, inputs, story.id, sentence.position,
                        frag.fragment_index, stats, &pairs);
      } else {
        emit_e2s_unit(sentence, condition, inputs, story.id, sentence.position, 0, stats, &pairs);
      }
    }
  }
  return pairs;
}

}  // namespace eventweave
