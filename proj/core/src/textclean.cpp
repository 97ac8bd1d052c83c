#include "eventweave/textclean.hpp"

#include <cctype>
#include <string>

namespace eventweave {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '-' ||
         c == '.' || c == '_';
}

// [[target|label]] -> label, [[x]] -> x. Unterminated brackets are left alone.
std::string strip_wiki_links(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 2, "[[") == 0) {
      std::size_t close = s.find("]]", i + 2);
      if (close != std::string::npos) {
        std::string inner = s.substr(i + 2, close - (i + 2));
        std::size_t pipe = inner.rfind('|');
        out += (pipe == std::string::npos) ? inner : inner.substr(pipe + 1);
        i = close + 2;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

std::string strip_html_tags(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      std::size_t close = s.find('>', i + 1);
      if (close != std::string::npos && close > i + 1) {
        i = close + 1;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

// True when [begin, end) consists of capitalized words ("Actor Name").
bool is_cased_annotation(const std::string& s, std::size_t begin, std::size_t end) {
  bool expect_upper = true;
  bool saw_word = false;
  for (std::size_t i = begin; i < end; ++i) {
    char c = s[i];
    if (c == ' ') {
      if (!saw_word) return false;
      expect_upper = true;
      continue;
    }
    if (expect_upper) {
      if (!std::isupper(static_cast<unsigned char>(c))) return false;
      expect_upper = false;
      saw_word = true;
    } else if (!is_word_char(c)) {
      return false;
    }
  }
  return saw_word && !expect_upper;
}

// Preceding word must start with an uppercase letter for the parenthetical to
// count as a cast annotation: "John (Actor Name) runs." -> "John runs."
// Checked against the output built so far, so earlier removals are reflected.
bool ends_with_capitalized_name(const std::string& s) {
  std::size_t j = s.size();
  while (j > 0 && s[j - 1] == ' ') --j;
  if (j == 0) return false;
  std::size_t word_end = j;
  while (j > 0 && is_word_char(s[j - 1])) --j;
  if (j == word_end) return false;
  return std::isupper(static_cast<unsigned char>(s[j])) != 0;
}

std::string strip_cast_annotations(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '(') {
      std::size_t close = s.find(')', i + 1);
      if (close != std::string::npos && is_cased_annotation(s, i + 1, close) &&
          ends_with_capitalized_name(out)) {
        while (!out.empty() && out.back() == ' ') out.pop_back();
        i = close + 1;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

std::string normalize_whitespace(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;  // trims leading whitespace
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_space) out += ' ';
      in_space = true;
    } else {
      out += c;
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace

std::string clean_text(const std::string& raw) {
  // Nested markup ([[a[[b]]c]]) needs repeated passes; every pass shrinks
  // the string, so this terminates.
  std::string s = raw;
  while (true) {
    std::string next = strip_wiki_links(s);
    next = strip_html_tags(next);
    next = strip_cast_annotations(next);
    next = normalize_whitespace(next);
    if (next == s) return s;
    s = std::move(next);
  }
}

}  // namespace eventweave
