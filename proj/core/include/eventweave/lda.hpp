#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "eventweave/corpus.hpp"

namespace eventweave {

/// Count state of a collapsed-Gibbs LDA model. Immutable once trained.
struct TopicModel {
  int topics = 0;          // K
  double alpha = 0.0;      // symmetric document-topic prior
  double beta = 0.0;       // symmetric topic-word prior
  std::uint64_t seed = 0;
  std::vector<std::string> vocabulary;             // word id -> word
  std::unordered_map<std::string, int> word_ids;   // word -> word id
  std::vector<std::vector<std::int64_t>> topic_word;  // K x V counts
  std::vector<std::int64_t> topic_totals;             // K

  int vocabulary_size() const { return static_cast<int>(vocabulary.size()); }
};

struct LdaOptions {
  int topics = 100;
  int iterations = 1000;
  double alpha = -1.0;  // <0 means the 50/K heuristic
  double beta = 0.01;
  std::uint64_t seed = 13;
};

/// Lowercased content lemmas of a story with stopwords removed; the document
/// unit used for topic modeling.
std::vector<std::string> story_terms(const Story& story);

bool is_stopword(const std::string& word);

/// Collapsed Gibbs sampling over whole stories. Identical seeds produce
/// bit-identical count matrices. `ll_trace`, when given, receives the
/// corpus log-likelihood after every sweep. Throws std::invalid_argument
/// for K < 2, no iterations, or an empty vocabulary.
TopicModel train_lda(const Corpus& corpus, const LdaOptions& options,
                     std::vector<double>* ll_trace = nullptr);

/// Genre id of a story: argmax of the smoothed topic proportion after a
/// fixed 20-sweep fold-in against frozen model counts, ties toward smaller k.
/// A story with no in-vocabulary terms gets genre 0 and sets *no_vocabulary.
int assign_genre(const Story& story, const TopicModel& model, bool* no_vocabulary = nullptr);

/// The n highest-probability words of topic k (smoothed), ties by word id.
std::vector<std::string> top_words(const TopicModel& model, int k, int n);

void save_topic_model(const TopicModel& model, std::ostream& out);
void save_topic_model_file(const TopicModel& model, const std::string& path);
TopicModel load_topic_model(std::istream& in);
TopicModel load_topic_model_file(const std::string& path);

}  // namespace eventweave
