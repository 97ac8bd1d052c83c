#include "eventweave/seqmodel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "binio.hpp"

namespace eventweave {

namespace {

constexpr const char kModelMagic[] = "EWSM0001";
constexpr int kStartId = 0;
constexpr int kEndId = 1;
constexpr int kSepId = 2;
constexpr int kFirstWordId = 3;

std::uint64_t fnv1a_mix(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= 0xff;
  h *= 1099511628211ull;
  return h;
}

}  // namespace

int ConditionalSequenceModel::intern(const std::string& token) {
  auto it = ids_.find(token);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(vocab_.size());
  vocab_.push_back(token);
  ids_.emplace(token, id);
  return id;
}

int ConditionalSequenceModel::id_of(const std::string& token) const {
  auto it = ids_.find(token);
  return it == ids_.end() ? -1 : it->second;
}

std::string ConditionalSequenceModel::pack_context(const std::vector<int>& ids) {
  std::string key;
  key.reserve(ids.size() * 4);
  for (int id : ids) {
    auto u = static_cast<std::uint32_t>(id);
    key.push_back(static_cast<char>(u & 0xff));
    key.push_back(static_cast<char>((u >> 8) & 0xff));
    key.push_back(static_cast<char>((u >> 16) & 0xff));
    key.push_back(static_cast<char>((u >> 24) & 0xff));
  }
  return key;
}

// Order-insensitive: a multiset hash over the input tokens, so "a b" and
// "b a" share a bucket. Unknown tokens hash by their spelling.
std::uint64_t ConditionalSequenceModel::input_bucket(
    const std::vector<std::string>& input) const {
  std::vector<std::string> sorted = input;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = 1469598103934665603ull;
  for (const std::string& t : sorted) h = fnv1a_mix(h, t);
  return h;
}

ConditionalSequenceModel train_sequence_model(const std::vector<SequencePair>& pairs,
                                              const SeqModelOptions& options) {
  if (pairs.empty()) throw std::invalid_argument("seqmodel: no training pairs");
  if (options.order < 1) throw std::invalid_argument("seqmodel: order must be >= 1");
  if (options.k <= 0) throw std::invalid_argument("seqmodel: smoothing k must be > 0");

  ConditionalSequenceModel model;
  model.options_ = options;
  model.intern(kSeqStart);
  model.intern(kSeqEnd);
  model.intern(kSeqSep);

  for (const SequencePair& pair : pairs) {
    for (const std::string& t : pair.input) model.intern(t);
    const std::uint64_t bucket = model.input_bucket(pair.input);
    auto& bucket_table = model.bucket_tables_[bucket];

    std::vector<int> out_ids;
    out_ids.reserve(pair.output.size() + 1);
    for (const std::string& t : pair.output) out_ids.push_back(model.intern(t));
    out_ids.push_back(kEndId);

    for (std::size_t i = 0; i < out_ids.size(); ++i) {
      const int next = out_ids[i];
      const int full = std::min<int>(options.order, static_cast<int>(i));
      // The bucket table keeps the position's full-length context; the global
      // table keeps every suffix so backoff always has a shorter view.
      std::vector<int> ctx(out_ids.begin() + (static_cast<int>(i) - full),
                           out_ids.begin() + static_cast<int>(i));
      ++bucket_table[ConditionalSequenceModel::pack_context(ctx)][next];
      for (int len = 0; len <= full; ++len) {
        std::vector<int> suffix(ctx.end() - len, ctx.end());
        ++model.global_table_[ConditionalSequenceModel::pack_context(suffix)][next];
      }
    }
  }
  return model;
}

const ConditionalSequenceModel::Counts* ConditionalSequenceModel::lookup(
    const std::vector<std::string>& input, const std::vector<std::string>& context) const {
  const int len = std::min<int>(options_.order, static_cast<int>(context.size()));
  std::vector<int> ctx_ids;
  ctx_ids.reserve(len);
  bool known = true;
  for (std::size_t i = context.size() - static_cast<std::size_t>(len); i < context.size(); ++i) {
    int id = id_of(context[i]);
    if (id < 0) known = false;
    ctx_ids.push_back(id);
  }
  if (known) {
    const std::string key = pack_context(ctx_ids);
    auto bt = bucket_tables_.find(input_bucket(input));
    if (bt != bucket_tables_.end()) {
      auto it = bt->second.find(key);
      if (it != bt->second.end()) return &it->second;
    }
    auto git = global_table_.find(key);
    if (git != global_table_.end()) return &git->second;
  }
  auto unigram = global_table_.find(std::string());
  return unigram == global_table_.end() ? nullptr : &unigram->second;
}

std::map<std::string, double> ConditionalSequenceModel::next_distribution(
    const std::vector<std::string>& input, const std::vector<std::string>& context) const {
  const Counts* counts = lookup(input, context);
  // Candidates: every trained token plus the end marker; start/sep excluded.
  std::vector<int> candidates;
  candidates.reserve(vocab_.size());
  candidates.push_back(kEndId);
  for (int id = kFirstWordId; id < static_cast<int>(vocab_.size()); ++id)
    candidates.push_back(id);

  std::int64_t total = 0;
  if (counts != nullptr)
    for (const auto& [id, c] : *counts) total += c;

  const double k = options_.k;
  const double denom = static_cast<double>(total) + k * static_cast<double>(candidates.size());
  std::map<std::string, double> dist;
  for (int id : candidates) {
    std::int64_t c = 0;
    if (counts != nullptr) {
      auto it = counts->find(id);
      if (it != counts->end()) c = it->second;
    }
    dist[vocab_[static_cast<std::size_t>(id)]] = (static_cast<double>(c) + k) / denom;
  }
  return dist;
}

std::vector<std::pair<std::string, double>> ConditionalSequenceModel::ranked_next(
    const std::vector<std::string>& input, const std::vector<std::string>& context) const {
  std::map<std::string, double> dist = next_distribution(input, context);
  std::vector<std::pair<std::string, double>> ranked(dist.begin(), dist.end());
  // Probability descending; the map already orders ties lexicographically,
  // and stable_sort keeps that order.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return ranked;
}

std::vector<std::string> ConditionalSequenceModel::greedy_decode(
    const std::vector<std::string>& input, int max_len) const {
  std::vector<std::string> out;
  while (static_cast<int>(out.size()) < max_len) {
    auto ranked = ranked_next(input, out);
    if (ranked.empty()) break;
    const std::string& best = ranked.front().first;
    if (best == kSeqEnd) break;
    out.push_back(best);
  }
  return out;
}

std::vector<std::string> ConditionalSequenceModel::beam_decode(
    const std::vector<std::string>& input, int beam_width, int max_len) const {
  if (beam_width < 1) beam_width = 1;

  struct Hypothesis {
    std::vector<std::string> tokens;
    double logprob = 0.0;
    bool finished = false;
  };
  auto better = [](const Hypothesis& a, const Hypothesis& b) {
    if (a.logprob != b.logprob) return a.logprob > b.logprob;
    if (a.tokens != b.tokens) return a.tokens < b.tokens;
    return a.finished && !b.finished;
  };

  std::vector<Hypothesis> beam = {Hypothesis{}};
  for (int step = 0; step < max_len + 1; ++step) {
    bool any_live = false;
    std::vector<Hypothesis> pool;
    for (const Hypothesis& hyp : beam) {
      if (hyp.finished || static_cast<int>(hyp.tokens.size()) >= max_len) {
        // Frozen (or length-capped) hypotheses keep competing by score.
        pool.push_back(hyp);
        continue;
      }
      any_live = true;
      auto ranked = ranked_next(input, hyp.tokens);
      const int expansions = std::min<int>(beam_width, static_cast<int>(ranked.size()));
      for (int i = 0; i < expansions; ++i) {
        Hypothesis next = hyp;
        next.logprob += std::log(ranked[static_cast<std::size_t>(i)].second);
        if (ranked[static_cast<std::size_t>(i)].first == kSeqEnd) {
          next.finished = true;
        } else {
          next.tokens.push_back(ranked[static_cast<std::size_t>(i)].first);
        }
        pool.push_back(std::move(next));
      }
    }
    if (!any_live) break;
    std::sort(pool.begin(), pool.end(), better);
    if (static_cast<int>(pool.size()) > beam_width)
      pool.resize(static_cast<std::size_t>(beam_width));
    beam = std::move(pool);
  }

  const Hypothesis* best_finished = nullptr;
  const Hypothesis* best_any = nullptr;
  for (const Hypothesis& hyp : beam) {
    if (best_any == nullptr || better(hyp, *best_any)) best_any = &hyp;
    if (hyp.finished && (best_finished == nullptr || better(hyp, *best_finished)))
      best_finished = &hyp;
  }
  if (best_finished != nullptr) return best_finished->tokens;
  return best_any != nullptr ? best_any->tokens : std::vector<std::string>{};
}

double ConditionalSequenceModel::sequence_log_prob(const std::vector<std::string>& input,
                                                   const std::vector<std::string>& output) const {
  double lp = 0.0;
  std::vector<std::string> context;
  for (const std::string& token : output) {
    auto dist = next_distribution(input, context);
    auto it = dist.find(token);
    if (it == dist.end()) return -std::numeric_limits<double>::infinity();
    lp += std::log(it->second);
    context.push_back(token);
  }
  auto dist = next_distribution(input, context);
  lp += std::log(dist.at(kSeqEnd));
  return lp;
}

std::map<std::string, std::int64_t> ConditionalSequenceModel::output_unigram_counts() const {
  std::map<std::string, std::int64_t> out;
  auto it = global_table_.find(std::string());
  if (it == global_table_.end()) return out;
  for (const auto& [id, count] : it->second) {
    if (id == kEndId) continue;
    out[vocab_[static_cast<std::size_t>(id)]] = count;
  }
  return out;
}

void ConditionalSequenceModel::save(std::ostream& out) const {
  out.write(kModelMagic, 8);
  binio::write_i64(out, options_.order);
  binio::write_f64(out, options_.k);
  binio::write_i64(out, options_.condition);
  binio::write_u64(out, vocab_.size());
  for (const std::string& t : vocab_) binio::write_string(out, t);

  auto write_context_table = [&](const std::unordered_map<std::string, Counts>& table) {
    std::vector<const std::string*> keys;
    keys.reserve(table.size());
    for (const auto& [key, counts] : table) keys.push_back(&key);
    std::sort(keys.begin(), keys.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    binio::write_u64(out, keys.size());
    for (const std::string* key : keys) {
      binio::write_string(out, *key);
      const Counts& counts = table.at(*key);
      binio::write_u64(out, counts.size());
      for (const auto& [id, c] : counts) {
        binio::write_i64(out, id);
        binio::write_i64(out, c);
      }
    }
  };

  std::vector<std::uint64_t> buckets;
  buckets.reserve(bucket_tables_.size());
  for (const auto& [bucket, table] : bucket_tables_) buckets.push_back(bucket);
  std::sort(buckets.begin(), buckets.end());
  binio::write_u64(out, buckets.size());
  for (std::uint64_t bucket : buckets) {
    binio::write_u64(out, bucket);
    write_context_table(bucket_tables_.at(bucket));
  }
  write_context_table(global_table_);
}

void ConditionalSequenceModel::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("seqmodel: cannot write " + path);
  save(out);
}

ConditionalSequenceModel ConditionalSequenceModel::load(std::istream& in) {
  binio::expect_magic(in, kModelMagic, "seqmodel");
  ConditionalSequenceModel model;
  model.options_.order = static_cast<int>(binio::read_i64(in));
  model.options_.k = binio::read_f64(in);
  model.options_.condition = static_cast<int>(binio::read_i64(in));
  const std::uint64_t v = binio::read_u64(in);
  for (std::uint64_t i = 0; i < v; ++i) {
    model.vocab_.push_back(binio::read_string(in));
    model.ids_.emplace(model.vocab_.back(), static_cast<int>(i));
  }

  auto read_context_table = [&](std::unordered_map<std::string, Counts>* table) {
    const std::uint64_t n = binio::read_u64(in);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::string key = binio::read_string(in);
      const std::uint64_t m = binio::read_u64(in);
      Counts counts;
      for (std::uint64_t j = 0; j < m; ++j) {
        int id = static_cast<int>(binio::read_i64(in));
        counts[id] = binio::read_i64(in);
      }
      (*table)[std::move(key)] = std::move(counts);
    }
  };

  const std::uint64_t n_buckets = binio::read_u64(in);
  for (std::uint64_t i = 0; i < n_buckets; ++i) {
    std::uint64_t bucket = binio::read_u64(in);
    read_context_table(&model.bucket_tables_[bucket]);
  }
  read_context_table(&model.global_table_);
  return model;
}

ConditionalSequenceModel ConditionalSequenceModel::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("seqmodel: cannot open " + path);
  return ConditionalSequenceModel::load(in);
}

}  // namespace eventweave
