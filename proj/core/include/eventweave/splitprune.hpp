#pragma once

#include <string>
#include <vector>

#include "eventweave/corpus.hpp"

namespace eventweave {

/// One simplified clause produced by split_and_prune. `sentence` is a
/// self-contained reparse of the kept tokens (reindexed, fragment head as
/// root) so fragments can be eventified like ordinary sentences.
struct SentenceFragment {
  ParsedSentence sentence;
  std::string story_id;
  int sentence_position = 0;
  int fragment_index = 0;

  std::vector<std::string> tokens() const;  // surface words incl. final period
  std::string text() const;                 // detokenized, "Sam insults him."
};

/// S+P sentence simplification:
///  1. every obl/nmod subtree introduced by a case-marked preposition is
///     pruned;
///  2. clausal conjuncts (a conj verb with its own subject) become separate
///     fragments, dropping their coordinating conjunction — verb conjuncts
///     sharing the subject stay put;
///  3. a ccomp/advcl/acl:relcl clause is detached into its own fragment with
///     its first word removed, unless that word is a pronoun.
/// Fragments are ordered by head position, re-capitalized, and terminated
/// with a period. A verbless sentence comes back as a single fragment.
std::vector<SentenceFragment> split_and_prune(const ParsedSentence& sentence);

/// Joins tokens with spaces, attaching punctuation to the preceding word.
std::string detokenize(const std::vector<std::string>& tokens);

}  // namespace eventweave
