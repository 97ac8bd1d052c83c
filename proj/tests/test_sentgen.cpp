#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eventweave/eventify.hpp"
#include "eventweave/pairs.hpp"
#include "eventweave/sentgen.hpp"
#include "support/builders.hpp"

using namespace eventweave;
using eventweave::testing::fixture_wordnet;
using eventweave::testing::golden_corpus;

TEST_CASE("partial generalization of the droid sentence") {
  const ParsedSentence& s = golden_corpus().stories[0].sentences[6];
  GeneralizedSentence g = generalize_sentence(s, &fixture_wordnet());
  const std::string expected =
      "The remaining activity.n.01 launches a happening.n.01 droid at the ORGANIZATION 1 7 0 "
      "which property.n.01 near the person.n.01 enlisted_person.n.01 rear skilled_worker.n.01 "
      "who uses a instrumentality.n.03 of happening.n.01 chemical.n.01 to dislodge the "
      "device.n.01 .";
  CHECK(join_tokens(g.tokens) == expected);
}

TEST_CASE("function words pass through untouched") {
  using eventweave::testing::Tok;
  ParsedSentence s = eventweave::testing::make_sentence({
      Tok{"not", "not", "PART", 2, "advmod"},
      Tok{"so", "so", "ADV", 0, "root"},
      Tok{"!", "!", "PUNCT", 2, "punct"},
  });
  GeneralizedSentence g = generalize_sentence(s, &fixture_wordnet());
  CHECK(g.tokens == std::vector<std::string>{"not", "so", "!"});
  CHECK(g.noun_table.empty());
  CHECK(g.ne_table.size() == 0);
}

TEST_CASE("token count is preserved after NE pre-merge") {
  for (const Story& story : golden_corpus().stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      GeneralizedSentence g = generalize_sentence(sentence, &fixture_wordnet());
      CHECK(g.tokens.size() == merged_surface_tokens(sentence).size());
    }
  }
}

TEST_CASE("restore inverts generalization in place") {
  for (const Story& story : golden_corpus().stories) {
    for (const ParsedSentence& sentence : story.sentences) {
      GeneralizedSentence g = generalize_sentence(sentence, &fixture_wordnet());
      CHECK(g.restore() == merged_surface_tokens(sentence));
    }
  }
}

TEST_CASE("fill via working memory inverts generalization") {
  const ParsedSentence& s = golden_corpus().stories[0].sentences[7];  // John ... pox ...
  GeneralizedSentence g = generalize_sentence(s, &fixture_wordnet());
  WorkingMemory memory;
  memory.ingest(g);
  CHECK(fill_placeholders(g.tokens, memory) == merged_surface_tokens(s));
}

TEST_CASE("direct lookup fill") {
  WorkingMemory memory;
  memory.observe_name(0, "John");
  CHECK(fill_placeholders({"<NE>0", "walks"}, memory) ==
        std::vector<std::string>{"John", "walks"});
}

TEST_CASE("noun lookup built from eventifying a sentence") {
  const ParsedSentence& s = golden_corpus().stories[2].sentences[0];  // The boy runs.
  GeneralizedSentence g = generalize_sentence(s, &fixture_wordnet());
  REQUIRE(g.tokens == std::vector<std::string>{"The", "male.n.02", "runs", "."});
  WorkingMemory memory;
  memory.ingest(g);
  CHECK(fill_placeholders({"male.n.02", "runs"}, memory) ==
        std::vector<std::string>{"boy", "runs"});
}

TEST_CASE("unresolved placeholders fall back and stay consistent") {
  WorkingMemory memory;
  CHECK(fill_placeholders({"<NE>3", "smiles"}, memory) ==
        std::vector<std::string>{"someone", "smiles"});
  // The fallback is remembered for later steps.
  CHECK(memory.name_for(3) == "someone");
  CHECK(fill_placeholders({"<NE>3", "hides"}, memory) ==
        std::vector<std::string>{"someone", "hides"});
}

TEST_CASE("unresolved synset falls back to its head lemma") {
  WorkingMemory memory;
  CHECK(fill_placeholders({"male.n.02", "runs"}, memory) ==
        std::vector<std::string>{"male", "runs"});
  CHECK(fill_placeholders({"self-propelled_vehicle.n.01"}, memory) ==
        std::vector<std::string>{"self-propelled", "vehicle"});
}

TEST_CASE("shared table continues numbering across a pair") {
  const Story& pairs = golden_corpus().stories[1];
  NeTable table;
  GeneralizedSentence a = generalize_sentence(pairs.sentences[0], &fixture_wordnet(), &table);
  GeneralizedSentence b = generalize_sentence(pairs.sentences[1], &fixture_wordnet(), &table);
  CHECK(a.tokens[0] == "<NE>0");
  CHECK(b.tokens[0] == "<NE>0");  // same Kendall, same index
  CHECK(table.size() == 1);
}

TEST_CASE("inversion holds on a thousand synthetic sentences") {
  // Nouns within one sentence come from distinct chains, so the most-recent
  // noun per synset is exact.
  const auto pools = eventweave::testing::directional_pools(30, 10, 24, 24, 5);
  auto lex = eventweave::testing::build_synthetic_lexicon("sentgen_inv", pools.noun_to_target,
                                                          pools.class_members);
  eventweave::testing::TestRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::string& name = pools.names[rng.below(pools.names.size())];
    const std::string& verb = pools.verbs[rng.below(pools.verbs.size())];
    std::size_t obj = rng.below(pools.nouns.size());
    std::size_t obl = (obj + 1 + rng.below(pools.nouns.size() - 1)) % pools.nouns.size();
    ParsedSentence s = eventweave::testing::svo_sentence(name, verb, pools.nouns[obj],
                                                         pools.nouns[obl], "inv", 0);
    GeneralizedSentence g = generalize_sentence(s, &lex.wordnet);
    WorkingMemory memory;
    memory.ingest(g);
    CHECK(fill_placeholders(g.tokens, memory) == merged_surface_tokens(s));
  }
}
