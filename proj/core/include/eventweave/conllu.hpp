#pragma once

#include <iosfwd>
#include <string>

#include "eventweave/corpus.hpp"

namespace eventweave {

/// Reads a multi-document CoNLL-U stream into a Corpus. Stories are delimited
/// by `# newdoc id = <story_id>` comment lines; sentences by blank lines.
/// NER tags travel in the MISC column as `NER=<tag>`. Multiword-token ranges
/// (1-2) and empty nodes (1.1) are skipped. Malformed token lines and head
/// indices out of range raise std::runtime_error naming the line number.
Corpus parse_conllu(std::istream& in, const std::string& default_story_id = "doc1");
Corpus parse_conllu_text(const std::string& text, const std::string& default_story_id = "doc1");
Corpus parse_conllu_file(const std::string& path);

/// Inverse of parse_conllu: re-parsing the output yields an equal Corpus.
void write_conllu(const Corpus& corpus, std::ostream& out);
std::string to_conllu(const Corpus& corpus);

}  // namespace eventweave
