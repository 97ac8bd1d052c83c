#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "eventweave/pairs.hpp"

namespace eventweave {

inline constexpr const char* kSeqStart = "<s>";
inline constexpr const char* kSeqEnd = "</s>";
inline constexpr const char* kSeqSep = "<sep>";

struct SeqModelOptions {
  int order = 3;      // output-side context length
  double k = 0.01;    // add-k smoothing constant
  int condition = -1; // dataset condition the model was trained on, if any
};

/// Count-based conditional sequence model: next-token counts keyed by an
/// order-insensitive hash of the input token multiset plus the trailing
/// output context. Lookups back off (input bucket, context) ->
/// (global, context) -> (global, unigram). A trained model is immutable and
/// safe for concurrent decoding.
class ConditionalSequenceModel {
 public:
  /// Add-k smoothed distribution over every emittable token (vocabulary plus
  /// the end-of-sequence marker); sums to 1 within 1e-9.
  std::map<std::string, double> next_distribution(const std::vector<std::string>& input,
                                                  const std::vector<std::string>& context) const;

  /// Appends the argmax token at each step (ties to the lexicographically
  /// smallest) until the end marker or max_len; the marker is not returned.
  std::vector<std::string> greedy_decode(const std::vector<std::string>& input,
                                         int max_len) const;

  /// Width-B beam search. Each live hypothesis expands with its B most
  /// probable tokens; the global top B by accumulated log probability
  /// survive; finishing hypotheses freeze and keep competing on final score.
  /// Returns the best finished hypothesis, or the best live one at max_len.
  std::vector<std::string> beam_decode(const std::vector<std::string>& input, int beam_width,
                                       int max_len) const;

  double sequence_log_prob(const std::vector<std::string>& input,
                           const std::vector<std::string>& output) const;

  int order() const { return options_.order; }
  double smoothing() const { return options_.k; }
  int condition() const { return options_.condition; }
  std::size_t vocabulary_size() const { return vocab_.size(); }

  /// Training output-token stream counts (end markers excluded); the
  /// reference distribution for perplexity reports.
  std::map<std::string, std::int64_t> output_unigram_counts() const;

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static ConditionalSequenceModel load(std::istream& in);
  static ConditionalSequenceModel load_file(const std::string& path);

 private:
  friend ConditionalSequenceModel train_sequence_model(const std::vector<SequencePair>& pairs,
                                                       const SeqModelOptions& options);

  using Counts = std::map<int, std::int64_t>;  // next-token id -> count

  int intern(const std::string& token);
  int id_of(const std::string& token) const;  // -1 when unknown
  static std::string pack_context(const std::vector<int>& ids);
  std::uint64_t input_bucket(const std::vector<std::string>& input) const;
  const Counts* lookup(const std::vector<std::string>& input,
                       const std::vector<std::string>& context) const;
  std::vector<std::pair<std::string, double>> ranked_next(
      const std::vector<std::string>& input, const std::vector<std::string>& context) const;

  SeqModelOptions options_;
  std::vector<std::string> vocab_;                  // id -> token; 0..2 are specials
  std::unordered_map<std::string, int> ids_;
  std::unordered_map<std::uint64_t, std::unordered_map<std::string, Counts>> bucket_tables_;
  std::unordered_map<std::string, Counts> global_table_;  // all context lengths 0..order
};

/// Accumulates counts from terminated output sequences. Deterministic.
/// Throws std::invalid_argument for an empty pair list, order < 1, or k <= 0.
ConditionalSequenceModel train_sequence_model(const std::vector<SequencePair>& pairs,
                                              const SeqModelOptions& options);

}  // namespace eventweave
