#include "eventweave/lda.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "binio.hpp"

namespace eventweave {

namespace {

constexpr const char kLdaMagic[] = "EWLDA001";

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1); avoids std::uniform_real_distribution so results are
  // identical across standard libraries.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_content_pos(const std::string& upos) {
  return upos == "NOUN" || upos == "PROPN" || upos == "VERB" || upos == "ADJ" ||
         upos == "ADV";
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool alphabetic(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '\'')
      return false;
  return true;
}

int sample_topic(const std::vector<double>& weights, double u) {
  double total = 0.0;
  for (double w : weights) total += w;
  double target = u * total;
  double acc = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    acc += weights[k];
    if (target < acc) return static_cast<int>(k);
  }
  return static_cast<int>(weights.size()) - 1;
}

struct Docs {
  std::vector<std::vector<int>> words;  // per doc, word ids
};

Docs make_documents(const Corpus& corpus, TopicModel* model) {
  Docs docs;
  docs.words.reserve(corpus.stories.size());
  for (const Story& story : corpus.stories) {
    std::vector<int> ids;
    for (const std::string& term : story_terms(story)) {
      auto it = model->word_ids.find(term);
      int id;
      if (it == model->word_ids.end()) {
        id = static_cast<int>(model->vocabulary.size());
        model->word_ids.emplace(term, id);
        model->vocabulary.push_back(term);
      } else {
        id = it->second;
      }
      ids.push_back(id);
    }
    docs.words.push_back(std::move(ids));
  }
  return docs;
}

double corpus_log_likelihood(const Docs& docs, const TopicModel& model,
                             const std::vector<std::vector<std::int64_t>>& doc_topic) {
  const int K = model.topics;
  const double V = model.vocabulary_size();
  double ll = 0.0;
  for (std::size_t d = 0; d < docs.words.size(); ++d) {
    const auto& ids = docs.words[d];
    double len = static_cast<double>(ids.size());
    for (int w : ids) {
      double p = 0.0;
      for (int k = 0; k < K; ++k) {
        double theta = (static_cast<double>(doc_topic[d][k]) + model.alpha) /
                       (len + K * model.alpha);
        double phi = (static_cast<double>(model.topic_word[k][w]) + model.beta) /
                     (static_cast<double>(model.topic_totals[k]) + V * model.beta);
        p += theta * phi;
      }
      ll += std::log(p);
    }
  }
  return ll;
}

}  // namespace

bool is_stopword(const std::string& word) {
  static const std::unordered_set<std::string> kStopwords = {
      "a",    "an",   "and",  "are",  "as",    "at",    "be",    "been",  "but",
      "by",   "can",  "could", "did",  "do",    "does",  "for",   "from",  "had",
      "has",  "have", "he",   "her",  "hers",  "him",   "his",   "i",     "if",
      "in",   "into", "is",   "it",   "its",   "just",  "me",    "more",  "most",
      "my",   "no",   "not",  "of",   "on",    "or",    "our",   "she",   "so",
      "some", "than", "that", "the",  "their", "them",  "then",  "there", "these",
      "they", "this", "those", "to",   "up",    "us",    "was",   "we",    "were",
      "what", "when", "which", "who",  "will",  "with",  "would", "you",   "your",
  };
  return kStopwords.count(word) > 0;
}

std::vector<std::string> story_terms(const Story& story) {
  std::vector<std::string> terms;
  for (const ParsedSentence& sentence : story.sentences) {
    for (const Token& t : sentence.tokens) {
      if (!is_content_pos(t.upos)) continue;
      std::string term = lower(t.lemma.empty() ? t.surface : t.lemma);
      if (!alphabetic(term) || is_stopword(term)) continue;
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

TopicModel train_lda(const Corpus& corpus, const LdaOptions& options,
                     std::vector<double>* ll_trace) {
  if (options.topics < 2)
    throw std::invalid_argument("train_lda: need at least 2 topics");
  if (options.iterations < 1)
    throw std::invalid_argument("train_lda: need at least 1 iteration");
  if (corpus.stories.empty()) throw std::invalid_argument("train_lda: empty corpus");

  TopicModel model;
  model.topics = options.topics;
  model.alpha = options.alpha < 0 ? 50.0 / options.topics : options.alpha;
  model.beta = options.beta;
  model.seed = options.seed;

  Docs docs = make_documents(corpus, &model);
  const int V = model.vocabulary_size();
  if (V == 0) throw std::invalid_argument("train_lda: empty vocabulary");
  const int K = model.topics;

  model.topic_word.assign(K, std::vector<std::int64_t>(V, 0));
  model.topic_totals.assign(K, 0);
  std::vector<std::vector<std::int64_t>> doc_topic(docs.words.size(),
                                                   std::vector<std::int64_t>(K, 0));
  std::vector<std::vector<int>> assignments(docs.words.size());

  SplitMix64 rng{options.seed};
  for (std::size_t d = 0; d < docs.words.size(); ++d) {
    assignments[d].resize(docs.words[d].size());
    for (std::size_t i = 0; i < docs.words[d].size(); ++i) {
      int k = static_cast<int>(rng.next() % static_cast<std::uint64_t>(K));
      assignments[d][i] = k;
      ++doc_topic[d][k];
      ++model.topic_word[k][docs.words[d][i]];
      ++model.topic_totals[k];
    }
  }

  std::vector<double> weights(K);
  for (int iter = 0; iter < options.iterations; ++iter) {
    for (std::size_t d = 0; d < docs.words.size(); ++d) {
      for (std::size_t i = 0; i < docs.words[d].size(); ++i) {
        const int w = docs.words[d][i];
        int k = assignments[d][i];
        --doc_topic[d][k];
        --model.topic_word[k][w];
        --model.topic_totals[k];
        for (int t = 0; t < K; ++t) {
          weights[t] = (static_cast<double>(doc_topic[d][t]) + model.alpha) *
                       (static_cast<double>(model.topic_word[t][w]) + model.beta) /
                       (static_cast<double>(model.topic_totals[t]) + V * model.beta);
        }
        k = sample_topic(weights, rng.uniform());
        assignments[d][i] = k;
        ++doc_topic[d][k];
        ++model.topic_word[k][w];
        ++model.topic_totals[k];
      }
    }
    if (ll_trace != nullptr) ll_trace->push_back(corpus_log_likelihood(docs, model, doc_topic));
  }
  return model;
}

int assign_genre(const Story& story, const TopicModel& model, bool* no_vocabulary) {
  if (no_vocabulary != nullptr) *no_vocabulary = false;
  std::vector<int> ids;
  for (const std::string& term : story_terms(story)) {
    auto it = model.word_ids.find(term);
    if (it != model.word_ids.end()) ids.push_back(it->second);
  }
  if (ids.empty()) {
    if (no_vocabulary != nullptr) *no_vocabulary = true;
    return 0;
  }

  const int K = model.topics;
  const double V = model.vocabulary_size();
  constexpr int kFoldInSweeps = 20;
  SplitMix64 rng{model.seed ^ fnv1a(story.id)};
  std::vector<std::int64_t> doc_topic(K, 0);
  std::vector<int> assignment(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    int k = static_cast<int>(rng.next() % static_cast<std::uint64_t>(K));
    assignment[i] = k;
    ++doc_topic[k];
  }
  std::vector<double> weights(K);
  for (int sweep = 0; sweep < kFoldInSweeps; ++sweep) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const int w = ids[i];
      int k = assignment[i];
      --doc_topic[k];
      for (int t = 0; t < K; ++t) {
        // Model counts stay frozen during fold-in.
        weights[t] = (static_cast<double>(doc_topic[t]) + model.alpha) *
                     (static_cast<double>(model.topic_word[t][w]) + model.beta) /
                     (static_cast<double>(model.topic_totals[t]) + V * model.beta);
      }
      k = sample_topic(weights, rng.uniform());
      assignment[i] = k;
      ++doc_topic[k];
    }
  }
  int best = 0;
  for (int k = 1; k < K; ++k)
    if (doc_topic[k] > doc_topic[best]) best = k;  // ties keep the smaller k
  return best;
}

std::vector<std::string> top_words(const TopicModel& model, int k, int n) {
  if (k < 0 || k >= model.topics)
    throw std::out_of_range("top_words: topic " + std::to_string(k) + " out of range");
  if (n < 0) n = 0;
  const int V = model.vocabulary_size();
  std::vector<int> order(V);
  for (int w = 0; w < V; ++w) order[w] = w;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return model.topic_word[k][x] > model.topic_word[k][y];
  });
  if (n > V) n = V;
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(model.vocabulary[order[i]]);
  return out;
}

void save_topic_model(const TopicModel& model, std::ostream& out) {
  out.write(kLdaMagic, 8);
  binio::write_i64(out, model.topics);
  binio::write_f64(out, model.alpha);
  binio::write_f64(out, model.beta);
  binio::write_u64(out, model.seed);
  binio::write_u64(out, model.vocabulary.size());
  for (const std::string& w : model.vocabulary) binio::write_string(out, w);
  for (int k = 0; k < model.topics; ++k)
    for (std::int64_t c : model.topic_word[k]) binio::write_i64(out, c);
  for (std::int64_t c : model.topic_totals) binio::write_i64(out, c);
}

void save_topic_model_file(const TopicModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("lda: cannot write " + path);
  save_topic_model(model, out);
}

TopicModel load_topic_model(std::istream& in) {
  binio::expect_magic(in, kLdaMagic, "lda");
  TopicModel model;
  model.topics = static_cast<int>(binio::read_i64(in));
  model.alpha = binio::read_f64(in);
  model.beta = binio::read_f64(in);
  model.seed = binio::read_u64(in);
  const std::uint64_t v = binio::read_u64(in);
  model.vocabulary.reserve(v);
  for (std::uint64_t i = 0; i < v; ++i) {
    model.vocabulary.push_back(binio::read_string(in));
    model.word_ids.emplace(model.vocabulary.back(), static_cast<int>(i));
  }
  model.topic_word.assign(model.topics, std::vector<std::int64_t>(v, 0));
  for (int k = 0; k < model.topics; ++k)
    for (std::uint64_t w = 0; w < v; ++w) model.topic_word[k][w] = binio::read_i64(in);
  model.topic_totals.resize(model.topics);
  for (int k = 0; k < model.topics; ++k) model.topic_totals[k] = binio::read_i64(in);
  return model;
}

TopicModel load_topic_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("lda: cannot open " + path);
  return load_topic_model(in);
}

}  // namespace eventweave
