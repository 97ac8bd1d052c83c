#include "eventweave/conllu.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace eventweave {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Accepts "# newdoc id = x" and "# text = ...": returns the value or nullopt.
bool comment_value(const std::string& line, const std::string& key, std::string* value) {
  std::string body = trim(line.substr(1));
  if (body.compare(0, key.size(), key) != 0) return false;
  std::string rest = trim(body.substr(key.size()));
  if (rest.empty() || rest[0] != '=') return false;
  *value = trim(rest.substr(1));
  return true;
}

std::string ner_from_misc(const std::string& misc) {
  if (misc.empty() || misc == "_") return "O";
  std::size_t start = 0;
  while (start < misc.size()) {
    std::size_t bar = misc.find('|', start);
    std::string attr = misc.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    if (attr.compare(0, 4, "NER=") == 0) return attr.substr(4);
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return "O";
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("conllu: line " + std::to_string(line_no) + ": " + what);
}

std::string underscore_to_empty(const std::string& s) { return s == "_" ? "" : s; }
std::string empty_to_underscore(const std::string& s) { return s.empty() ? "_" : s; }

}  // namespace

Corpus parse_conllu(std::istream& in, const std::string& default_story_id) {
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  Story* story = nullptr;
  ParsedSentence sentence;
  std::vector<std::size_t> token_lines;  // source line of each token, for errors
  std::string pending_text;
  std::size_t line_no = 0;

  auto begin_story = [&](const std::string& id) {
    if (!seen_ids.insert(id).second)
      parse_fail(line_no, "duplicate story id '" + id + "'");
    corpus.stories.push_back(Story{id, {}});
    story = &corpus.stories.back();
  };

  auto flush_sentence = [&]() {
    if (sentence.tokens.empty()) {
      pending_text.clear();
      return;
    }
    const int n = static_cast<int>(sentence.tokens.size());
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const Token& t = sentence.tokens[i];
      if (t.head < 0 || t.head > n)
        parse_fail(token_lines[i], "head index " + std::to_string(t.head) +
                                       " out of range [0, " + std::to_string(n) + "]");
    }
    if (story == nullptr) begin_story(default_story_id);
    sentence.story_id = story->id;
    sentence.position = static_cast<int>(story->sentences.size());
    sentence.raw_text = pending_text;
    story->sentences.push_back(std::move(sentence));
    sentence = ParsedSentence{};
    token_lines.clear();
    pending_text.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence();
      continue;
    }
    if (line[0] == '#') {
      std::string value;
      if (comment_value(line, "newdoc id", &value)) {
        flush_sentence();
        begin_story(value);
      } else if (comment_value(line, "text", &value)) {
        pending_text = value;
      }
      continue;
    }

    std::vector<std::string> f = split_tabs(line);
    if (f.size() != 10)
      parse_fail(line_no, "expected 10 tab-separated fields, got " + std::to_string(f.size()));
    const std::string& id = f[0];
    // Skip multiword-token ranges (1-2) and empty nodes (1.1).
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) continue;

    Token tok;
    try {
      tok.index = std::stoi(id);
      tok.head = std::stoi(f[6]);
    } catch (const std::exception&) {
      parse_fail(line_no, "non-numeric ID or HEAD field");
    }
    tok.surface = f[1];
    tok.lemma = underscore_to_empty(f[2]);
    tok.upos = underscore_to_empty(f[3]);
    tok.deprel = underscore_to_empty(f[7]);
    tok.ner = ner_from_misc(f[9]);
    if (tok.index != static_cast<int>(sentence.tokens.size()) + 1)
      parse_fail(line_no, "token index " + id + " not contiguous");
    sentence.tokens.push_back(std::move(tok));
    token_lines.push_back(line_no);
  }
  flush_sentence();
  return corpus;
}

Corpus parse_conllu_text(const std::string& text, const std::string& default_story_id) {
  std::istringstream in(text);
  return parse_conllu(in, default_story_id);
}

Corpus parse_conllu_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("conllu: cannot open " + path);
  return parse_conllu(in, path);
}

void write_conllu(const Corpus& corpus, std::ostream& out) {
  for (const Story& story : corpus.stories) {
    out << "# newdoc id = " << story.id << "\n";
    for (const ParsedSentence& sentence : story.sentences) {
      if (!sentence.raw_text.empty()) out << "# text = " << sentence.raw_text << "\n";
      for (const Token& t : sentence.tokens) {
        out << t.index << '\t' << t.surface << '\t' << empty_to_underscore(t.lemma) << '\t'
            << empty_to_underscore(t.upos) << '\t' << "_" << '\t' << "_" << '\t' << t.head
            << '\t' << empty_to_underscore(t.deprel) << '\t' << "_" << '\t'
            << (t.ner == "O" || t.ner.empty() ? std::string("_") : "NER=" + t.ner) << "\n";
      }
      out << "\n";
    }
  }
}

std::string to_conllu(const Corpus& corpus) {
  std::ostringstream out;
  write_conllu(corpus, out);
  return out.str();
}

}  // namespace eventweave
