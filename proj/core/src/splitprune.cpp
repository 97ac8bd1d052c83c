#include "eventweave/splitprune.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace eventweave {

namespace {

std::string base_deprel(const std::string& deprel) {
  std::size_t colon = deprel.find(':');
  return colon == std::string::npos ? deprel : deprel.substr(0, colon);
}

bool is_verbal(const Token& t) { return t.upos == "VERB" || t.upos == "AUX"; }

bool is_punct(const Token& t) { return t.upos == "PUNCT" || base_deprel(t.deprel) == "punct"; }

bool is_pronoun_word(const Token& t) {
  if (t.upos == "PRON") return true;
  static const std::unordered_set<std::string> kRelative = {"who", "whom", "whose", "which",
                                                            "that"};
  std::string s = t.surface;
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return kRelative.count(s) > 0;
}

struct Analysis {
  const ParsedSentence* sentence = nullptr;
  std::vector<std::vector<int>> children;  // by token index, 1-based

  explicit Analysis(const ParsedSentence& s) : sentence(&s) {
    children.resize(s.tokens.size() + 1);
    for (const Token& t : s.tokens)
      if (t.head >= 0 && t.head <= static_cast<int>(s.tokens.size()) && t.head != 0)
        children[t.head].push_back(t.index);
  }

  void collect_subtree(int root, std::vector<int>* out) const {
    out->push_back(root);
    for (int c : children[root]) collect_subtree(c, out);
  }

  int first_child(int head, const std::string& base) const {
    for (int c : children[head])
      if (base_deprel(token(c).deprel) == base) return c;
    return 0;
  }

  const Token& token(int index) const { return sentence->tokens[index - 1]; }
};

std::string capitalize(std::string word) {
  for (char& c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) break;
  }
  return word;
}

bool is_terminal_punct(const std::string& s) { return s == "." || s == "!" || s == "?"; }

}  // namespace

std::vector<std::string> SentenceFragment::tokens() const {
  std::vector<std::string> out;
  out.reserve(sentence.tokens.size());
  for (const Token& t : sentence.tokens) out.push_back(t.surface);
  return out;
}

std::string SentenceFragment::text() const { return detokenize(tokens()); }

std::string detokenize(const std::vector<std::string>& tokens) {
  static const std::unordered_set<std::string> kNoSpaceBefore = {",", ".", "!", "?",
                                                                 ";", ":", "'s", "n't"};
  std::string out;
  for (const std::string& tok : tokens) {
    if (!out.empty() && kNoSpaceBefore.count(tok) == 0) out += ' ';
    out += tok;
  }
  return out;
}

std::vector<SentenceFragment> split_and_prune(const ParsedSentence& sentence) {
  Analysis a(sentence);
  const int n = static_cast<int>(sentence.tokens.size());

  // Pass 1: prune case-marked obl/nmod subtrees.
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  for (const Token& t : sentence.tokens) {
    std::string base = base_deprel(t.deprel);
    if (base != "obl" && base != "nmod") continue;
    if (a.first_child(t.index, "case") == 0) continue;
    std::vector<int> subtree;
    a.collect_subtree(t.index, &subtree);
    for (int i : subtree) removed[i] = true;
  }

  // Pass 2: fragment heads. The root always; a conj verb with its own
  // subject; a subordinate clause whose first surviving word is no pronoun.
  struct Head {
    int token = 0;
    bool drop_first_word = false;  // subordinate clauses lose the subordinator
    bool drop_cc = false;          // detached conjuncts lose their coordinator
  };
  std::vector<Head> heads;
  std::unordered_set<int> head_set;
  for (const Token& t : sentence.tokens) {
    if (removed[t.index]) continue;
    std::string base = base_deprel(t.deprel);
    if (t.head == 0) {
      heads.push_back({t.index, false, false});
      head_set.insert(t.index);
    } else if (base == "conj" && is_verbal(t) && a.first_child(t.index, "nsubj") != 0) {
      heads.push_back({t.index, false, true});
      head_set.insert(t.index);
    } else if (base == "ccomp" || base == "advcl" || t.deprel == "acl:relcl") {
      std::vector<int> subtree;
      a.collect_subtree(t.index, &subtree);
      std::sort(subtree.begin(), subtree.end());
      int first_word = 0;
      for (int i : subtree) {
        if (!removed[i] && !is_punct(a.token(i))) {
          first_word = i;
          break;
        }
      }
      if (first_word != 0 && !is_pronoun_word(a.token(first_word))) {
        heads.push_back({t.index, true, false});
        head_set.insert(t.index);
      }
    }
  }
  std::sort(heads.begin(), heads.end(), [](const Head& x, const Head& y) {
    return x.token < y.token;
  });
  if (heads.empty()) {
    // No dependency root marked; treat the whole sentence as one fragment.
    heads.push_back({n > 0 ? sentence.tokens.front().index : 0, false, false});
  }

  // Pass 3: assemble each fragment's token set.
  std::vector<SentenceFragment> fragments;
  for (const Head& head : heads) {
    if (head.token == 0) continue;
    std::vector<int> kept;
    // DFS that stops at other fragment heads and pruned subtrees.
    std::vector<int> stack = {head.token};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (removed[cur]) continue;
      if (cur != head.token && head_set.count(cur)) continue;
      if (head.drop_cc && base_deprel(a.token(cur).deprel) == "cc" &&
          a.token(cur).head == head.token)
        continue;
      kept.push_back(cur);
      for (int c : a.children[cur]) stack.push_back(c);
    }
    std::sort(kept.begin(), kept.end());

    if (head.drop_first_word) {
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (!is_punct(a.token(kept[i]))) {
          kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
          break;
        }
      }
    }
    // Trim leading/trailing punctuation; internal commas stay.
    while (!kept.empty() && is_punct(a.token(kept.front()))) kept.erase(kept.begin());
    while (!kept.empty() && is_punct(a.token(kept.back()))) kept.pop_back();
    if (kept.empty()) continue;

    SentenceFragment frag;
    frag.story_id = sentence.story_id;
    frag.sentence_position = sentence.position;
    frag.fragment_index = static_cast<int>(fragments.size());

    ParsedSentence& out = frag.sentence;
    out.story_id = sentence.story_id;
    out.position = sentence.position;
    std::vector<int> new_index(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < kept.size(); ++i) new_index[kept[i]] = static_cast<int>(i) + 1;
    for (int old : kept) {
      Token t = a.token(old);
      t.index = new_index[old];
      if (old == head.token || t.head <= 0 || t.head > n || new_index[t.head] == 0) {
        t.head = 0;
        t.deprel = "root";
      } else {
        t.head = new_index[t.head];
      }
      out.tokens.push_back(std::move(t));
    }
    // A fragment may keep several pieces whose heads were all removed; only
    // the fragment head stays root, the rest re-attach to it.
    int root_new = new_index[head.token];
    for (Token& t : out.tokens)
      if (t.head == 0 && t.index != root_new) {
        t.head = root_new;
        t.deprel = "dep";
      }
    out.tokens.front().surface = capitalize(out.tokens.front().surface);
    if (!is_terminal_punct(out.tokens.back().surface)) {
      Token period;
      period.index = static_cast<int>(out.tokens.size()) + 1;
      period.surface = ".";
      period.lemma = ".";
      period.upos = "PUNCT";
      period.head = root_new;
      period.deprel = "punct";
      out.tokens.push_back(std::move(period));
    }
    out.raw_text = frag.text();
    fragments.push_back(std::move(frag));
  }
  return fragments;
}

}  // namespace eventweave
