#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eventweave/textclean.hpp"
#include "support/builders.hpp"

using eventweave::clean_text;

TEST_CASE("piped wiki links keep the label") {
  CHECK(clean_text("[[Gotham City|Gotham]] burns") == "Gotham burns");
  CHECK(clean_text("[[x]] marks") == "x marks");
}

TEST_CASE("cast annotations after a name are removed") {
  CHECK(clean_text("John ([[Actor Name]]) runs.") == "John runs.");
  CHECK(clean_text("Maria (Jane Q. Doe) smiles.") == "Maria smiles.");
}

TEST_CASE("plain text passes through") {
  CHECK(clean_text("plain text") == "plain text");
}

TEST_CASE("lowercase parentheticals survive") {
  CHECK(clean_text("John (who ran) fell.") == "John (who ran) fell.");
}

TEST_CASE("html tags are stripped and whitespace collapses") {
  CHECK(clean_text("a <b>bold</b>   claim") == "a bold claim");
  CHECK(clean_text("  spaced\tout \n text ") == "spaced out text");
}

TEST_CASE("consecutive annotations are both removed") {
  CHECK(clean_text("Ann (Actor One) (Actor Two) waves.") == "Ann waves.");
}

TEST_CASE("clean_text is idempotent on generated markup soup") {
  eventweave::testing::TestRng rng(20240811);
  const std::vector<std::string> atoms = {
      "[[", "]]", "|", "(", ")", "<i>", "</i>", "Word", "name", "Alice", "Bob-Smith",
      " ", ".", "x", "Y", "1", "'", "<", ">",
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::string raw;
    const int len = 1 + static_cast<int>(rng.below(20));
    for (int i = 0; i < len; ++i) raw += atoms[rng.below(atoms.size())];
    const std::string once = clean_text(raw);
    const std::string twice = clean_text(once);
    CAPTURE(raw);
    CHECK(once == twice);
  }
}
