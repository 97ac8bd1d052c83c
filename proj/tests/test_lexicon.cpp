#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eventweave/verbnet.hpp"
#include "eventweave/wordnet.hpp"
#include "support/builders.hpp"

using namespace eventweave;
using eventweave::testing::fixture_verbnet;
using eventweave::testing::fixture_wordnet;

TEST_CASE("first sense lookup") {
  const WordNetIndex& wn = fixture_wordnet();
  auto car = wn.first_synset("car", 'n');
  REQUIRE(car.has_value());
  CHECK(car->render() == "car.n.01");
  CHECK_FALSE(wn.first_synset("qzx", 'n').has_value());
}

TEST_CASE("hypernym ancestor walks two levels") {
  const WordNetIndex& wn = fixture_wordnet();
  CHECK(wn.hypernym_ancestor("car", 'n')->render() == "self-propelled_vehicle.n.01");
  CHECK(wn.hypernym_ancestor("uncle", 'n')->render() == "relative.n.01");
  CHECK(wn.hypernym_ancestor("disgust", 'n')->render() == "feeling.n.01");
  CHECK(wn.hypernym_ancestor("pox", 'n')->render() == "contagious_disease.n.01");
  // Walked by hand through the fixture files: dog -> canine -> carnivore.
  CHECK(wn.hypernym_ancestor("dog", 'n')->render() == "carnivore.n.01");
}

TEST_CASE("sense numbers come from index ordering") {
  const WordNetIndex& wn = fixture_wordnet();
  CHECK(wn.hypernym_ancestor("boy", 'n')->render() == "male.n.02");
  CHECK(wn.hypernym_ancestor("can", 'n')->render() == "instrumentality.n.03");
}

TEST_CASE("root case returns the start synset") {
  const WordNetIndex& wn = fixture_wordnet();
  CHECK(wn.hypernym_ancestor("entity", 'n')->render() == "entity.n.01");
  // One step below the root stays put rather than generalizing to entity.
  CHECK(wn.hypernym_ancestor("physical_entity", 'n')->render() == "physical_entity.n.01");
  CHECK(wn.hypernym_ancestor("abstraction", 'n')->render() == "abstraction.n.01");
}

TEST_CASE("levels parameter") {
  const WordNetIndex& wn = fixture_wordnet();
  CHECK(wn.hypernym_ancestor("car", 'n', 0)->render() == "car.n.01");
  CHECK(wn.hypernym_ancestor("car", 'n', 1)->render() == "motor_vehicle.n.01");
  CHECK_FALSE(wn.hypernym_ancestor("qzx", 'n').has_value());
}

TEST_CASE("never returns the noun root for non-root lemmas") {
  const WordNetIndex& wn = fixture_wordnet();
  for (const char* lemma : {"car", "dog", "boy", "pox", "whole", "object", "buzz", "yard"}) {
    auto result = wn.hypernym_ancestor(lemma, 'n', 50);  // overshoot every chain
    REQUIRE(result.has_value());
    CHECK(result->render() != "entity.n.01");
  }
}

TEST_CASE("exception list lemmatization") {
  const WordNetIndex& wn = fixture_wordnet();
  CHECK(wn.lemmatize("went", 'v') == "go");
  CHECK(wn.lemmatize("men", 'n') == "man");  // exception entry, not indexed
  CHECK(wn.lemmatize("cars", 'n') == "car");  // detachment rule
  CHECK(wn.lemmatize("walks", 'v') == "walk");
  CHECK(wn.lemmatize("launches", 'v') == "launch");
  CHECK_FALSE(wn.lemmatize("qzxs", 'n').has_value());
}

TEST_CASE("plural noun resolves through morphology") {
  const WordNetIndex& wn = fixture_wordnet();
  CHECK(wn.hypernym_ancestor("guns", 'n')->render() == "instrument.n.01");
}

TEST_CASE("missing file errors name the file") {
  try {
    load_wordnet("/nonexistent/wordnet");
    FAIL("expected load error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("data.noun") != std::string::npos);
  }
}

TEST_CASE("synset id grammar") {
  CHECK(looks_like_synset("car.n.01"));
  CHECK(looks_like_synset("self-propelled_vehicle.n.01"));
  CHECK(looks_like_synset("male.n.02"));
  CHECK_FALSE(looks_like_synset("car"));
  CHECK_FALSE(looks_like_synset("car.x.01"));
  CHECK_FALSE(looks_like_synset("Car.n.01"));
  CHECK_FALSE(looks_like_synset("car.n.1"));
  CHECK_FALSE(looks_like_synset("escape-51.1"));
}

TEST_CASE("verbnet class membership") {
  const VerbNetIndex& vn = fixture_verbnet();
  CHECK(vn.verb_class("arrive") == "escape-51.1");
  CHECK(vn.verb_class("transfer") == "contribute-13.2-2");  // subclass member
  CHECK(vn.verb_class("regard") == "characterize-29.2");
  CHECK(vn.verb_class("unleash") == "disassemble-23.3");
  CHECK(vn.verb_class("go") == "escape-51.1");
  CHECK(vn.verb_class("disburse") == "contribute-13.2-1-1");  // nested subclass
  CHECK_FALSE(vn.verb_class("qzx").has_value());
}

TEST_CASE("verb class determinism and tie-break") {
  using eventweave::testing::build_synthetic_lexicon;
  auto lex = build_synthetic_lexicon(
      "tiebreak", {{"rock", "object"}},
      {{"zap-99.1", {"shared"}}, {"amble-11.2", {"shared"}}, {"mosey-51.9", {"alone"}}});
  CHECK(lex.verbnet.verb_class("shared") == "amble-11.2");  // smallest id wins
  for (int i = 0; i < 5; ++i) CHECK(lex.verbnet.verb_class("shared") == "amble-11.2");
}

TEST_CASE("verb class id grammar") {
  CHECK(looks_like_verb_class("escape-51.1"));
  CHECK(looks_like_verb_class("contribute-13.2-2"));
  CHECK(looks_like_verb_class("animal_sounds-38"));
  CHECK_FALSE(looks_like_verb_class("escape"));
  CHECK_FALSE(looks_like_verb_class("Escape-51.1"));
  CHECK_FALSE(looks_like_verb_class("male.n.02"));
  CHECK_FALSE(looks_like_verb_class("-51.1"));
}
