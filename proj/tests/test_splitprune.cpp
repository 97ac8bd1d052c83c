#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eventweave/eventify.hpp"
#include "eventweave/splitprune.hpp"
#include "support/builders.hpp"

using namespace eventweave;
using eventweave::testing::golden_corpus;

namespace {
std::vector<std::string> fragment_texts(const ParsedSentence& s) {
  std::vector<std::string> out;
  for (const SentenceFragment& f : split_and_prune(s)) out.push_back(f.text());
  return out;
}
}  // namespace

TEST_CASE("the Lenny sentence splits into the four fragments") {
  const ParsedSentence& s = golden_corpus().stories[0].sentences[4];
  CHECK(fragment_texts(s) == std::vector<std::string>{
                                 "Lenny begins to walk away.",
                                 "Sam insults him.",
                                 "He turns and fires.",
                                 "The gun explodes.",
                             });
}

TEST_CASE("nothing to split or prune") {
  const ParsedSentence& s = golden_corpus().stories[2].sentences[1];  // The dog sleeps.
  CHECK(fragment_texts(s) == std::vector<std::string>{"The dog sleeps."});
}

TEST_CASE("pronoun-initial relative clause stays attached") {
  const ParsedSentence& s = golden_corpus().stories[0].sentences[5];
  CHECK(fragment_texts(s) == std::vector<std::string>{"Mary, who ran, fell."});
}

TEST_CASE("subordinate clause detaches and loses its first word") {
  const ParsedSentence& s = golden_corpus().stories[2].sentences[2];  // After the sun set, ...
  CHECK(fragment_texts(s) == std::vector<std::string>{"The sun set.", "He slept."});
}

TEST_CASE("fragments carry provenance and end with a period") {
  const ParsedSentence& s = golden_corpus().stories[0].sentences[4];
  auto fragments = split_and_prune(s);
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    CHECK(fragments[i].story_id == "golden");
    CHECK(fragments[i].sentence_position == 4);
    CHECK(fragments[i].fragment_index == static_cast<int>(i));
    REQUIRE(!fragments[i].tokens().empty());
    CHECK(fragments[i].tokens().back() == ".");
  }
}

TEST_CASE("no fragment keeps a case-marked obl subtree") {
  for (const Story& story : golden_corpus().stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      for (const SentenceFragment& frag : split_and_prune(sentence)) {
        const ParsedSentence& fs = frag.sentence;
        for (const Token& t : fs.tokens) {
          if (t.deprel.rfind("obl", 0) != 0) continue;
          for (const Token& child : fs.tokens)
            CHECK(!(child.head == t.index && child.deprel == "case"));
        }
      }
    }
  }
}

TEST_CASE("fragment words are a subset of the source words") {
  for (const Story& story : golden_corpus().stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      std::multiset<std::string> source;
      for (const Token& t : sentence.tokens) {
        std::string lowered = t.surface;
        for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        source.insert(lowered);
      }
      source.insert(".");  // appended terminator is always allowed
      for (const SentenceFragment& frag : split_and_prune(sentence)) {
        for (const std::string& word : frag.tokens()) {
          std::string lowered = word;
          for (char& c : lowered)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          auto it = source.find(lowered);
          CAPTURE(word);
          CHECK(it != source.end());
        }
      }
    }
  }
}

TEST_CASE("fragment count is at least one for verbal sentences") {
  for (const Story& story : golden_corpus().stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      bool has_verb = false;
      for (const Token& t : sentence.tokens)
        if (t.upos == "VERB" || t.upos == "AUX") has_verb = true;
      if (has_verb) CHECK(!split_and_prune(sentence).empty());
    }
  }
}

TEST_CASE("verbless sentences come back whole") {
  const ParsedSentence& birds = golden_corpus().stories[0].sentences[3];
  auto fragments = split_and_prune(birds);
  REQUIRE(fragments.size() == 1);
  CHECK(fragments[0].text() == "Birds.");
}

TEST_CASE("single-fragment outputs are fixed points") {
  for (const Story& story : golden_corpus().stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      for (const SentenceFragment& frag : split_and_prune(sentence)) {
        auto again = split_and_prune(frag.sentence);
        REQUIRE(again.size() == 1);
        CHECK(again[0].tokens() == frag.tokens());
      }
    }
  }
}

TEST_CASE("fragments re-eventify like sentences") {
  const ParsedSentence& s = golden_corpus().stories[0].sentences[4];
  auto fragments = split_and_prune(s);
  REQUIRE(fragments.size() == 4);
  auto first = extract_events(fragments[3].sentence);  // The gun explodes.
  REQUIRE(first.size() == 1);
  CHECK(first[0].event == Event{"gun", "explode", kEmptyParameter, kEmptyParameter});
}
