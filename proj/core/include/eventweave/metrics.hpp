#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eventweave/pairs.hpp"
#include "eventweave/seqmodel.hpp"

namespace eventweave {

/// Token counts over a reference stream; p(x) = count(x) / total.
struct UnigramTable {
  std::map<std::string, std::int64_t> counts;
  std::int64_t total = 0;

  static UnigramTable from_stream(const std::vector<std::string>& tokens);
  static UnigramTable from_counts(const std::map<std::string, std::int64_t>& counts);
};

/// 2 to the cross-entropy of the test stream's empirical distribution against
/// the reference unigram distribution. Tokens unseen in the reference get
/// `floor` probability mass before renormalization. With test == reference
/// this is exactly 2^entropy(reference). Throws on an empty stream.
double unigram_perplexity(const UnigramTable& reference, const std::vector<std::string>& test,
                          double floor = 1e-6);
double unigram_perplexity(const std::vector<std::string>& reference,
                          const std::vector<std::string>& test, double floor = 1e-6);

/// Corpus-level BLEU with uniform 1..max_n weights and brevity penalty
/// min(1, e^(1 - r/c)). Unsmoothed by default: an order with candidate
/// n-grams but zero matches sends the score to 0. `add_one_smoothing`
/// applies +1 to the clipped counts of orders above 1.
double bleu(const std::vector<std::vector<std::string>>& candidates,
            const std::vector<std::vector<std::string>>& references, int max_n = 4,
            bool add_one_smoothing = false);

struct EvalReport {
  int condition = -1;
  std::string condition_name;
  double perplexity_heldout = 0.0;    // reference stream vs gold outputs
  double perplexity_generated = 0.0;  // reference stream vs decoded outputs
  double bleu_score = 0.0;
  std::size_t pair_count = 0;
  std::size_t vocabulary = 0;

  std::string to_json() const;
  /// One aligned row, "(3) Generalized  54.231  0.0575" style.
  std::string table_row() const;
};

struct EvaluateOptions {
  int beam_width = 5;
  int max_len = 16;
  bool strip_genre = false;
  int condition = -1;
  std::string condition_name;
};

/// Decodes every held-out input with beam search, strips genre tokens when
/// flagged, and reports BLEU plus both unigram perplexities (the ambiguity in
/// scoring generated vs held-out streams is resolved by emitting both,
/// labeled). The reference stream is the model's training output stream.
EvalReport evaluate_condition(const ConditionalSequenceModel& model,
                              const std::vector<SequencePair>& heldout,
                              const EvaluateOptions& options);

/// Removes GENRE_<g> tokens from a sequence.
std::vector<std::string> strip_genre_tokens(const std::vector<std::string>& tokens);

}  // namespace eventweave
