#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eventweave/eventify.hpp"
#include "support/builders.hpp"

using namespace eventweave;
using eventweave::testing::fixture_verbnet;
using eventweave::testing::fixture_wordnet;
using eventweave::testing::golden_corpus;

namespace {
const ParsedSentence& golden_sentence(int i) {
  return golden_corpus().stories[0].sentences[static_cast<std::size_t>(i)];
}

Event original_event(const ParsedSentence& s, std::size_t i = 0) {
  auto events = extract_events(s);
  REQUIRE(events.size() > i);
  return events[i].event;
}
}  // namespace

TEST_CASE("conjoined subjects multiply the event") {
  auto events = extract_events(golden_sentence(0));  // John and Mary went to the store.
  REQUIRE(events.size() == 2);
  CHECK(events[0].event == Event{"john", "go", "store", kEmptyParameter});
  CHECK(events[1].event == Event{"mary", "go", "store", kEmptyParameter});
}

TEST_CASE("object and modifier slots fill by priority") {
  // His uncle however regards him with disgust.
  CHECK(original_event(golden_sentence(1)) == Event{"uncle", "regard", "him", "disgust"});
}

TEST_CASE("clausal complement extracted separately, not as modifier") {
  auto events = extract_events(golden_sentence(2));  // He thinks he's on a ... mission.
  REQUIRE(events.size() == 2);
  CHECK(events[0].event == Event{"he", "think", kEmptyParameter, kEmptyParameter});
  CHECK(events[1].event == Event{"he", "be", "mission", kEmptyParameter});
}

TEST_CASE("verbless sentence yields no events") {
  CHECK(extract_events(golden_sentence(3)).empty());  // Birds.
}

TEST_CASE("conjunction chain inherits subjects") {
  auto events = extract_events(golden_sentence(4));  // Lenny begins ... his hand.
  REQUIRE(events.size() == 5);
  CHECK(events[0].event == Event{"lenny", "begin", kEmptyParameter, "walk"});  // xcomp modifier
  CHECK(events[1].event == Event{"sam", "insult", "him", kEmptyParameter});
  CHECK(events[2].event == Event{"he", "turn", kEmptyParameter, kEmptyParameter});
  CHECK(events[3].event == Event{"he", "fire", kEmptyParameter, kEmptyParameter});
  CHECK(events[4].event == Event{"gun", "explode", "hand", kEmptyParameter});
}

TEST_CASE("every event has exactly four slots backed by verb tokens") {
  for (const Story& story : golden_corpus().stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      for (const ExtractedEvent& ev : extract_events(sentence)) {
        CHECK(!ev.event.s.empty());
        CHECK(!ev.event.v.empty());
        CHECK(!ev.event.o.empty());
        CHECK(!ev.event.m.empty());
        CHECK(ev.event.s != kEmptyParameter);
        CHECK(ev.event.v != kEmptyParameter);
        const Token* verb = sentence.token_at(ev.slot_token[1]);
        REQUIRE(verb != nullptr);
        CHECK((verb->upos == "VERB" || verb->upos == "AUX"));
      }
    }
  }
}

TEST_CASE("generalized golden event") {
  const ParsedSentence& s = golden_sentence(1);
  auto events = extract_events(s);
  REQUIRE(!events.empty());
  RepresentationConfig config;
  config.word_mode = WordMode::kGeneralized;
  NeTable table;
  intern_sentence_mentions(s, table);
  Event g = generalize_event(events[0], s, config, table, &fixture_wordnet(), &fixture_verbnet());
  CHECK(g == Event{"relative.n.01", "characterize-29.2", "male.n.02", "feeling.n.01"});
}

TEST_CASE("generalized event with NE tag and NER category") {
  const ParsedSentence& s = golden_sentence(7);  // John ... unleashes ... pox ...
  auto events = extract_events(s);
  REQUIRE(events.size() == 1);
  CHECK(events[0].event == Event{"john", "unleash", "pox", kEmptyParameter});
  RepresentationConfig config;
  config.word_mode = WordMode::kGeneralized;
  NeTable table;
  intern_sentence_mentions(s, table);
  Event g = generalize_event(events[0], s, config, table, &fixture_wordnet(), &fixture_verbnet());
  CHECK(g == Event{"<NE>0", "disassemble-23.3", "contagious_disease.n.01", kEmptyParameter});
}

TEST_CASE("original mode is the identity") {
  const ParsedSentence& s = golden_sentence(0);
  auto events = extract_events(s);
  RepresentationConfig config;  // defaults to kOriginal
  NeTable table;
  for (const auto& ev : events)
    CHECK(generalize_event(ev, s, config, table, &fixture_wordnet(), &fixture_verbnet()) ==
          ev.event);
}

TEST_CASE("original-with-NE replaces only person fillers") {
  const ParsedSentence& s = golden_sentence(7);
  auto events = extract_events(s);
  RepresentationConfig config;
  config.word_mode = WordMode::kOriginalWithNe;
  NeTable table;
  intern_sentence_mentions(s, table);
  Event g = generalize_event(events[0], s, config, table, &fixture_wordnet(), &fixture_verbnet());
  CHECK(g == Event{"<NE>0", "unleash", "pox", kEmptyParameter});
}

TEST_CASE("generalization is idempotent on generalized values") {
  const ParsedSentence& s = golden_sentence(1);
  auto events = extract_events(s);
  RepresentationConfig config;
  config.word_mode = WordMode::kGeneralized;
  NeTable table;
  ExtractedEvent once = events[0];
  once.event = generalize_event(once, s, config, table, &fixture_wordnet(), &fixture_verbnet());
  Event twice = generalize_event(once, s, config, table, &fixture_wordnet(), &fixture_verbnet());
  CHECK(twice == once.event);
}

TEST_CASE("ne table indices follow mention order") {
  const ParsedSentence& s = golden_corpus().stories[1].sentences[2];  // Ann meets Bob.
  NeTable table;
  intern_sentence_mentions(s, table);
  CHECK(table.index_of("Ann") == 0);
  CHECK(table.index_of("Bob") == 1);
}

TEST_CASE("assign_ne_indices keeps first-occurrence order") {
  NeTable t = assign_ne_indices({"Kendall", "Ann", "Kendall", "Bob"});
  CHECK(t.size() == 3);
  CHECK(t.index_of("Kendall") == 0);
  CHECK(t.index_of("Ann") == 1);
  CHECK(t.index_of("Bob") == 2);
}

TEST_CASE("continued scope shares indices across a pair") {
  const Story& pairs = golden_corpus().stories[1];
  NeTable shared;
  intern_sentence_mentions(pairs.sentences[0], shared);  // Kendall runs.
  intern_sentence_mentions(pairs.sentences[1], shared);  // Kendall hides.
  CHECK(shared.size() == 1);
  CHECK(shared.index_of("Kendall") == 0);

  NeTable per_a, per_b;
  intern_sentence_mentions(pairs.sentences[0], per_a);
  intern_sentence_mentions(pairs.sentences[1], per_b);
  CHECK(per_a.index_of("Kendall") == 0);
  CHECK(per_b.index_of("Kendall") == 0);
}

TEST_CASE("pronoun table") {
  CHECK(pronoun_abstraction("him") == "male.n.02");
  CHECK(pronoun_abstraction("He") == "male.n.02");
  CHECK(pronoun_abstraction("she") == "female.n.02");
  CHECK(pronoun_abstraction("it") == "thing.n.08");
  CHECK(pronoun_abstraction("they") == "group.n.01");
  CHECK_FALSE(pronoun_abstraction("i").has_value());
  CHECK_FALSE(pronoun_abstraction("you").has_value());
  CHECK_FALSE(pronoun_abstraction("dog").has_value());
}

TEST_CASE("multiword person names merge into one slot filler") {
  using eventweave::testing::Tok;
  ParsedSentence s = eventweave::testing::make_sentence({
      Tok{"Remus", "remus", "PROPN", 3, "nsubj", "PERSON"},
      Tok{"Lupin", "lupin", "PROPN", 1, "flat", "PERSON"},
      Tok{"runs", "run", "VERB", 0, "root"},
      Tok{".", ".", "PUNCT", 3, "punct"},
  });
  auto events = extract_events(s);
  REQUIRE(events.size() == 1);
  CHECK(events[0].event.s == "remus_lupin");
  auto mentions = person_mentions(s);
  REQUIRE(mentions.size() == 1);
  CHECK(mentions[0].name == "Remus_Lupin");
}

TEST_CASE("generalized vocabulary is never larger than original") {
  const auto pools = eventweave::testing::directional_pools(20, 12, 16, 5, 4);
  auto lex = eventweave::testing::build_synthetic_lexicon("eventify_vocab", pools.noun_to_target,
                                                          pools.class_members);
  Corpus corpus = eventweave::testing::directional_corpus(pools, 40, 6, 99);
  std::set<std::string> original, generalized;
  RepresentationConfig config;
  config.word_mode = WordMode::kGeneralized;
  for (const Story& story : corpus.stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      NeTable table;
      intern_sentence_mentions(sentence, table);
      for (const auto& ev : extract_events(sentence)) {
        for (const std::string* slot : ev.event.slots()) original.insert(*slot);
        Event g = generalize_event(ev, sentence, config, table, &lex.wordnet, &lex.verbnet);
        for (const std::string* slot : g.slots()) generalized.insert(*slot);
      }
    }
  }
  CHECK(generalized.size() <= original.size());
  CHECK(!generalized.empty());
}
