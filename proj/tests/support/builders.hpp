#pragma once

// Shared fixtures and synthetic data builders for the test suites.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eventweave/conllu.hpp"
#include "eventweave/corpus.hpp"
#include "eventweave/verbnet.hpp"
#include "eventweave/wordnet.hpp"

namespace eventweave::testing {

std::string fixtures_dir();
std::string fixture_path(const std::string& relative);

/// Fresh directory under the system temp root; contents are overwritten.
std::string temp_fixture_dir(const std::string& name);

const Corpus& golden_corpus();          // parsed tests/fixtures/conllu/golden.conllu
const WordNetIndex& fixture_wordnet();  // tests/fixtures/wordnet
const VerbNetIndex& fixture_verbnet();  // tests/fixtures/verbnet

/// Deterministic xorshift-style generator for test data.
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  double uniform();
};

/// Letters-only word, deterministic in (prefix, n); safe for LDA tokenizers.
std::string coded_word(const std::string& prefix, int n);

/// Compact token spec for hand-built parses.
struct Tok {
  std::string surface;
  std::string lemma;
  std::string upos;
  int head = 0;
  std::string deprel;
  std::string ner = "O";
};

ParsedSentence make_sentence(const std::vector<Tok>& tokens, const std::string& story_id = "t",
                             int position = 0);

/// "<Name> <verb> the <obj> with the <obl> ." with a PERSON subject.
ParsedSentence svo_sentence(const std::string& name, const std::string& verb,
                            const std::string& obj, const std::string& obl,
                            const std::string& story_id, int position);

/// WordNet/VerbNet files written on the fly: every noun gets a two-link chain
/// noun -> <noun>_kind -> target, every class its member verbs.
struct SyntheticLexicon {
  std::string wordnet_dir;
  std::string verbnet_dir;
  WordNetIndex wordnet;
  VerbNetIndex verbnet;
};
SyntheticLexicon build_synthetic_lexicon(
    const std::string& name,
    const std::vector<std::pair<std::string, std::string>>& noun_to_target,
    const std::map<std::string, std::vector<std::string>>& class_members);

/// Pools behind the directional fixture corpus.
struct DirectionalPools {
  std::vector<std::string> names;    // PERSON surfaces
  std::vector<std::string> verbs;
  std::vector<std::string> nouns;
  std::vector<std::pair<std::string, std::string>> noun_to_target;
  std::map<std::string, std::vector<std::string>> class_members;
};
DirectionalPools directional_pools(int n_names, int n_verbs, int n_nouns, int n_targets,
                                   int n_classes);

/// Stories of "<Name> <verb> the <noun> with the <noun>." sentences drawn
/// from the pools; the substrate for the vocabulary/perplexity ordering.
Corpus directional_corpus(const DirectionalPools& pools, int n_stories, int sentences_per_story,
                          std::uint64_t seed);

/// Fully deterministic toy corpus: every event appears in exactly one story
/// position, so a trained model can only reproduce the gold continuation.
Corpus memorization_corpus(int n_stories, int sentences_per_story);

/// Documents drawn from disjoint per-topic vocabularies. labels[d] = topic.
Corpus planted_topic_corpus(int n_docs, int n_topics, int vocab_per_topic, int words_per_doc,
                            std::uint64_t seed, std::vector<int>* labels);

}  // namespace eventweave::testing
