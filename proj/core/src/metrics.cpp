#include "eventweave/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "eventweave/event.hpp"

namespace eventweave {

UnigramTable UnigramTable::from_stream(const std::vector<std::string>& tokens) {
  UnigramTable table;
  for (const std::string& t : tokens) {
    ++table.counts[t];
    ++table.total;
  }
  return table;
}

UnigramTable UnigramTable::from_counts(const std::map<std::string, std::int64_t>& counts) {
  UnigramTable table;
  table.counts = counts;
  for (const auto& [token, c] : counts) table.total += c;
  return table;
}

double unigram_perplexity(const UnigramTable& reference, const std::vector<std::string>& test,
                          double floor) {
  if (reference.total <= 0) throw std::invalid_argument("unigram_perplexity: empty reference");
  if (test.empty()) throw std::invalid_argument("unigram_perplexity: empty test stream");

  std::unordered_map<std::string, std::int64_t> test_counts;
  for (const std::string& t : test) ++test_counts[t];

  // Unseen test tokens take `floor` mass each; everything renormalizes.
  std::size_t unseen = 0;
  for (const auto& [token, c] : test_counts)
    if (reference.counts.find(token) == reference.counts.end()) ++unseen;
  const double norm = 1.0 + floor * static_cast<double>(unseen);

  const double test_total = static_cast<double>(test.size());
  double cross_entropy = 0.0;
  for (const auto& [token, c] : test_counts) {
    const double q = static_cast<double>(c) / test_total;
    auto it = reference.counts.find(token);
    const double p_raw = it != reference.counts.end()
                             ? static_cast<double>(it->second) /
                                   static_cast<double>(reference.total)
                             : floor;
    cross_entropy -= q * std::log2(p_raw / norm);
  }
  return std::exp2(cross_entropy);
}

double unigram_perplexity(const std::vector<std::string>& reference,
                          const std::vector<std::string>& test, double floor) {
  return unigram_perplexity(UnigramTable::from_stream(reference), test, floor);
}

namespace {

// Key for an n-gram: tokens joined with an unlikely separator.
std::string ngram_key(const std::vector<std::string>& tokens, std::size_t begin, int n) {
  std::string key;
  for (int i = 0; i < n; ++i) {
    if (i > 0) key += '\x1f';
    key += tokens[begin + static_cast<std::size_t>(i)];
  }
  return key;
}

}  // namespace

double bleu(const std::vector<std::vector<std::string>>& candidates,
            const std::vector<std::vector<std::string>>& references, int max_n,
            bool add_one_smoothing) {
  if (candidates.empty() || candidates.size() != references.size())
    throw std::invalid_argument("bleu: candidate/reference counts differ or are empty");
  if (max_n < 1) throw std::invalid_argument("bleu: max_n must be >= 1");

  std::vector<double> matches(static_cast<std::size_t>(max_n), 0.0);
  std::vector<double> totals(static_cast<std::size_t>(max_n), 0.0);
  std::int64_t candidate_len = 0;
  std::int64_t reference_len = 0;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& cand = candidates[i];
    const auto& ref = references[i];
    candidate_len += static_cast<std::int64_t>(cand.size());
    reference_len += static_cast<std::int64_t>(ref.size());
    for (int n = 1; n <= max_n; ++n) {
      if (static_cast<int>(cand.size()) < n) continue;
      std::unordered_map<std::string, std::int64_t> ref_ngrams;
      if (static_cast<int>(ref.size()) >= n)
        for (std::size_t b = 0; b + static_cast<std::size_t>(n) <= ref.size(); ++b)
          ++ref_ngrams[ngram_key(ref, b, n)];
      std::unordered_map<std::string, std::int64_t> cand_ngrams;
      for (std::size_t b = 0; b + static_cast<std::size_t>(n) <= cand.size(); ++b)
        ++cand_ngrams[ngram_key(cand, b, n)];
      for (const auto& [key, count] : cand_ngrams) {
        totals[static_cast<std::size_t>(n - 1)] += static_cast<double>(count);
        auto it = ref_ngrams.find(key);
        if (it != ref_ngrams.end())
          matches[static_cast<std::size_t>(n - 1)] +=
              static_cast<double>(std::min(count, it->second));  // clipped
      }
    }
  }

  double log_precision_sum = 0.0;
  int used_orders = 0;
  for (int n = 1; n <= max_n; ++n) {
    double total = totals[static_cast<std::size_t>(n - 1)];
    double match = matches[static_cast<std::size_t>(n - 1)];
    if (total <= 0.0) continue;  // no candidate n-grams of this order at all
    if (add_one_smoothing && n > 1) {
      match += 1.0;
      total += 1.0;
    }
    if (match <= 0.0) return 0.0;  // unsmoothed zero precision
    log_precision_sum += std::log(match / total);
    ++used_orders;
  }
  if (used_orders == 0) return 0.0;

  const double geo_mean = std::exp(log_precision_sum / static_cast<double>(used_orders));
  double brevity = 1.0;
  if (candidate_len < reference_len && candidate_len > 0)
    brevity = std::exp(1.0 - static_cast<double>(reference_len) /
                                 static_cast<double>(candidate_len));
  if (candidate_len == 0) return 0.0;
  return brevity * geo_mean;
}

std::vector<std::string> strip_genre_tokens(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens)
    if (!parse_genre_token(t)) out.push_back(t);
  return out;
}

std::string EvalReport::to_json() const {
  nlohmann::json j;
  j["condition"] = condition;
  j["condition_name"] = condition_name;
  j["perplexity_heldout"] = perplexity_heldout;
  j["perplexity_generated"] = perplexity_generated;
  j["bleu"] = bleu_score;
  j["pairs"] = pair_count;
  j["vocabulary"] = vocabulary;
  return j.dump(2);
}

std::string EvalReport::table_row() const {
  std::ostringstream out;
  std::string label = "(" + std::to_string(condition) + ") " + condition_name;
  out << label;
  for (std::size_t i = label.size(); i < 44; ++i) out << ' ';
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%10.3f  %8.4f", perplexity_heldout, bleu_score);
  out << buf;
  return out.str();
}

EvalReport evaluate_condition(const ConditionalSequenceModel& model,
                              const std::vector<SequencePair>& heldout,
                              const EvaluateOptions& options) {
  if (heldout.empty()) throw std::invalid_argument("evaluate_condition: empty held-out set");

  const UnigramTable reference = UnigramTable::from_counts(model.output_unigram_counts());

  std::vector<std::vector<std::string>> decoded;
  std::vector<std::vector<std::string>> expected;
  std::vector<std::string> generated_stream;
  std::vector<std::string> gold_stream;
  decoded.reserve(heldout.size());
  expected.reserve(heldout.size());

  for (const SequencePair& pair : heldout) {
    std::vector<std::string> input = pair.input;
    std::vector<std::string> gold = pair.output;
    if (options.strip_genre) {
      input = strip_genre_tokens(input);
      gold = strip_genre_tokens(gold);
    }
    std::vector<std::string> out = model.beam_decode(input, options.beam_width, options.max_len);
    if (options.strip_genre) out = strip_genre_tokens(out);
    generated_stream.insert(generated_stream.end(), out.begin(), out.end());
    gold_stream.insert(gold_stream.end(), gold.begin(), gold.end());
    decoded.push_back(std::move(out));
    expected.push_back(std::move(gold));
  }

  EvalReport report;
  report.condition = options.condition >= 0 ? options.condition : model.condition();
  report.condition_name = options.condition_name;
  report.pair_count = heldout.size();
  report.vocabulary = reference.counts.size();
  report.bleu_score = bleu(decoded, expected);
  report.perplexity_heldout = unigram_perplexity(reference, gold_stream);
  report.perplexity_generated =
      generated_stream.empty() ? 0.0 : unigram_perplexity(reference, generated_stream);
  return report;
}

}  // namespace eventweave
