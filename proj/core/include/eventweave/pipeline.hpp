#pragma once

#include <string>
#include <vector>

#include "eventweave/corpus.hpp"
#include "eventweave/dataset.hpp"
#include "eventweave/event.hpp"
#include "eventweave/seqmodel.hpp"
#include "eventweave/sentgen.hpp"

namespace eventweave {

/// Splits a decoded token stream into events of `slots_per_event` tokens,
/// padding a trailing partial group with EmptyParameter. Total: empty input
/// gives an empty list, malformed groups are padded or truncated, never
/// rejected. With 5 slots the fifth token is read as a genre id when it
/// parses as one.
std::vector<Event> parse_event_tokens(const std::vector<std::string>& tokens,
                                      int slots_per_event);

struct PipelineStep {
  int step = 0;
  std::vector<Event> events;                   // parsed successor events
  std::vector<std::string> raw_event_tokens;   // event model output
  std::vector<std::string> sentence_tokens;    // sentence model output
  std::string sentence;                        // surfaced text after filling
  bool surfaced_first_event_only = false;      // multi-event step, single-event sentence model
};

struct PipelineResult {
  std::vector<PipelineStep> transcript;
  std::string diagnostic;  // nonempty when a step aborted the run
};

struct PipelineOptions {
  int steps = 1;
  RepresentationConfig config;
  int event_beam = 5;
  int sentence_beam = 5;
  int event_max_len = 16;
  int sentence_max_len = 48;
};

/// The end-to-end generation loop: seed sentence -> events -> successor
/// events -> sentence, with generated events (not the surfaced sentence)
/// feeding the next step. A seed with no events throws; a step that decodes
/// no event aborts, returning the transcript so far plus a diagnostic.
PipelineResult run_pipeline(const ParsedSentence& seed, const ConditionalSequenceModel& e2e,
                            const ConditionalSequenceModel& e2s,
                            const PipelineOptions& options, const DatasetInputs& lexicons);

}  // namespace eventweave
