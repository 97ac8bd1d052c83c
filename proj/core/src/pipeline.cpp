#include "eventweave/pipeline.hpp"

#include <stdexcept>

#include "eventweave/eventify.hpp"
#include "eventweave/splitprune.hpp"

namespace eventweave {

std::vector<Event> parse_event_tokens(const std::vector<std::string>& tokens,
                                      int slots_per_event) {
  if (slots_per_event != 4 && slots_per_event != 5)
    throw std::invalid_argument("parse_event_tokens: slots_per_event must be 4 or 5");
  std::vector<Event> events;
  for (std::size_t at = 0; at < tokens.size(); at += static_cast<std::size_t>(slots_per_event)) {
    auto slot = [&](int offset) -> std::string {
      std::size_t i = at + static_cast<std::size_t>(offset);
      return i < tokens.size() ? tokens[i] : std::string(kEmptyParameter);
    };
    Event e;
    e.s = slot(0);
    e.v = slot(1);
    e.o = slot(2);
    e.m = slot(3);
    if (slots_per_event == 5) e.genre = parse_genre_token(slot(4));
    events.push_back(std::move(e));
  }
  return events;
}

namespace {

bool e2e_feeds_all_events(const ConditionalSequenceModel& e2e) {
  return e2e.condition() == static_cast<int>(E2ECondition::kMultiAllToAll);
}

bool e2s_takes_all_events(const ConditionalSequenceModel& e2s) {
  return e2s.condition() == static_cast<int>(E2SCondition::kAllGenEventsToGenSent) ||
         e2s.condition() == static_cast<int>(E2SCondition::kAllGenEventsToSpGenSent);
}

std::vector<std::string> events_to_tokens(const std::vector<Event>& events, std::size_t take) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < events.size() && i < take; ++i) {
    auto t = events[i].tokens();
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

}  // namespace

PipelineResult run_pipeline(const ParsedSentence& seed, const ConditionalSequenceModel& e2e,
                            const ConditionalSequenceModel& e2s,
                            const PipelineOptions& options, const DatasetInputs& lexicons) {
  if (options.steps < 1) throw std::invalid_argument("run_pipeline: steps must be >= 1");

  const auto extracted = extract_events(seed);
  if (extracted.empty())
    throw std::runtime_error("run_pipeline: seed sentence yields no events");

  // Working memory keeps the names and nouns abstracted away from the seed so
  // generated placeholders can be filled back in.
  WorkingMemory memory;
  NeTable table;
  if (options.config.word_mode != WordMode::kOriginal)
    memory.ingest(generalize_sentence(seed, lexicons.wordnet, &table));

  std::vector<Event> seed_events;
  for (const ExtractedEvent& ee : extracted)
    seed_events.push_back(
        generalize_event(ee, seed, options.config, table, lexicons.wordnet, lexicons.verbnet));

  const std::size_t feed = e2e_feeds_all_events(e2e) ? seed_events.size() : 1;
  std::vector<std::string> current = events_to_tokens(seed_events, feed);
  const int slots = options.config.include_genre ? 5 : 4;

  PipelineResult result;
  for (int step = 1; step <= options.steps; ++step) {
    std::vector<std::string> decoded =
        e2e.beam_decode(current, options.event_beam, options.event_max_len);
    std::vector<Event> events = parse_event_tokens(decoded, slots);
    if (events.empty()) {
      result.diagnostic = "step " + std::to_string(step) + ": event model decoded no event";
      break;
    }

    PipelineStep entry;
    entry.step = step;
    entry.events = events;
    entry.raw_event_tokens = decoded;
    entry.surfaced_first_event_only = events.size() > 1 && !e2s_takes_all_events(e2s);

    const std::size_t surface_take = e2s_takes_all_events(e2s) ? events.size() : 1;
    std::vector<std::string> sentence_input = events_to_tokens(events, surface_take);
    entry.sentence_tokens =
        e2s.beam_decode(sentence_input, options.sentence_beam, options.sentence_max_len);
    entry.sentence = detokenize(fill_placeholders(entry.sentence_tokens, memory));
    result.transcript.push_back(std::move(entry));

    const std::size_t next_feed = e2e_feeds_all_events(e2e) ? events.size() : 1;
    current = events_to_tokens(events, next_feed);
  }
  return result;
}

}  // namespace eventweave
