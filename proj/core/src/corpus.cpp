#include "eventweave/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "binio.hpp"

namespace eventweave {

namespace {
constexpr const char kCorpusMagic[] = "EWCORP01";

// xorshift-based splitmix64; stable across platforms, unlike std::shuffle.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};
}  // namespace

const Token* ParsedSentence::token_at(int index) const {
  if (index < 1 || index > static_cast<int>(tokens.size())) return nullptr;
  return &tokens[static_cast<std::size_t>(index) - 1];
}

std::vector<int> ParsedSentence::children_of(int head_index) const {
  std::vector<int> out;
  for (const Token& t : tokens)
    if (t.head == head_index) out.push_back(t.index);
  return out;
}

std::size_t Corpus::sentence_count() const {
  std::size_t n = 0;
  for (const Story& s : stories) n += s.sentences.size();
  return n;
}

CorpusSplit split_corpus(const Corpus& corpus, std::uint64_t seed) {
  const std::size_t n = corpus.stories.size();
  if (n < 10)
    throw std::invalid_argument("split_corpus: need at least 10 stories, got " +
                                std::to_string(n));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng{seed};
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(i + 1)]);

  const std::size_t n_held = n / 10;
  std::vector<int> bucket(n, 0);  // 0 train, 1 validation, 2 test
  for (std::size_t i = 0; i < n_held; ++i) bucket[order[i]] = 1;
  for (std::size_t i = n_held; i < 2 * n_held; ++i) bucket[order[i]] = 2;

  CorpusSplit split;
  for (std::size_t i = 0; i < n; ++i) {
    Corpus& dest = bucket[i] == 0 ? split.train : bucket[i] == 1 ? split.validation : split.test;
    dest.stories.push_back(corpus.stories[i]);
  }
  return split;
}

void save_corpus(const Corpus& corpus, std::ostream& out) {
  out.write(kCorpusMagic, 8);
  binio::write_u64(out, corpus.stories.size());
  for (const Story& story : corpus.stories) {
    binio::write_string(out, story.id);
    binio::write_u64(out, story.sentences.size());
    for (const ParsedSentence& s : story.sentences) {
      binio::write_string(out, s.raw_text);
      binio::write_u64(out, s.tokens.size());
      for (const Token& t : s.tokens) {
        binio::write_i64(out, t.index);
        binio::write_string(out, t.surface);
        binio::write_string(out, t.lemma);
        binio::write_string(out, t.upos);
        binio::write_i64(out, t.head);
        binio::write_string(out, t.deprel);
        binio::write_string(out, t.ner);
      }
    }
  }
}

void save_corpus_file(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("corpus: cannot write " + path);
  save_corpus(corpus, out);
}

Corpus load_corpus(std::istream& in) {
  binio::expect_magic(in, kCorpusMagic, "corpus");
  Corpus corpus;
  const std::uint64_t n_stories = binio::read_u64(in);
  corpus.stories.reserve(n_stories);
  for (std::uint64_t i = 0; i < n_stories; ++i) {
    Story story;
    story.id = binio::read_string(in);
    const std::uint64_t n_sentences = binio::read_u64(in);
    story.sentences.reserve(n_sentences);
    for (std::uint64_t j = 0; j < n_sentences; ++j) {
      ParsedSentence s;
      s.story_id = story.id;
      s.position = static_cast<int>(j);
      s.raw_text = binio::read_string(in);
      const std::uint64_t n_tokens = binio::read_u64(in);
      s.tokens.reserve(n_tokens);
      for (std::uint64_t k = 0; k < n_tokens; ++k) {
        Token t;
        t.index = static_cast<int>(binio::read_i64(in));
        t.surface = binio::read_string(in);
        t.lemma = binio::read_string(in);
        t.upos = binio::read_string(in);
        t.head = static_cast<int>(binio::read_i64(in));
        t.deprel = binio::read_string(in);
        t.ner = binio::read_string(in);
        s.tokens.push_back(std::move(t));
      }
      story.sentences.push_back(std::move(s));
    }
    corpus.stories.push_back(std::move(story));
  }
  return corpus;
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("corpus: cannot open " + path);
  return load_corpus(in);
}

}  // namespace eventweave
