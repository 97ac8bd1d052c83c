#include "eventweave/eventify.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace eventweave {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string base_deprel(const std::string& deprel) {
  std::size_t colon = deprel.find(':');
  return colon == std::string::npos ? deprel : deprel.substr(0, colon);
}

bool is_verbal(const Token& t) { return t.upos == "VERB" || t.upos == "AUX"; }

bool is_clause_link(const std::string& base) {
  return base == "conj" || base == "ccomp" || base == "advcl" || base == "parataxis";
}

bool all_upper_word(const std::string& s) {
  if (s.size() < 2) return false;
  for (char c : s)
    if (!std::isupper(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool already_generalized(const std::string& slot) {
  return parse_ne_tag(slot).has_value() || looks_like_synset(slot) ||
         looks_like_verb_class(slot) || all_upper_word(slot);
}

bool is_nominal(const Token& t) {
  return t.upos == "NOUN" || t.upos == "PROPN" || t.upos == "PRON" || t.upos == "NUM";
}

std::string sanitize_token(std::string s) {
  for (char& c : s)
    if (std::isspace(static_cast<unsigned char>(c))) c = '_';
  return s;
}

}  // namespace

std::vector<PersonMention> person_mentions(const ParsedSentence& sentence) {
  std::vector<PersonMention> mentions;
  const auto& tokens = sentence.tokens;
  for (std::size_t i = 0; i < tokens.size();) {
    if (tokens[i].ner != "PERSON") {
      ++i;
      continue;
    }
    PersonMention m;
    m.head_token = tokens[i].index;
    std::string name = tokens[i].surface;
    std::size_t j = i + 1;
    while (j < tokens.size() && tokens[j].ner == "PERSON") {
      name += "_" + tokens[j].surface;
      ++j;
    }
    m.last_token = tokens[j - 1].index;
    m.name = sanitize_token(name);
    mentions.push_back(std::move(m));
    i = j;
  }
  return mentions;
}

std::optional<PersonMention> mention_at(const ParsedSentence& sentence, int token_index) {
  for (const PersonMention& m : person_mentions(sentence))
    if (token_index >= m.head_token && token_index <= m.last_token) return m;
  return std::nullopt;
}

namespace {

// Lowercased lemma of one slot filler; PERSON runs are joined to one token.
// Pronouns keep their surface form ("him" stays "him", not lemma "he").
std::string render_slot(const ParsedSentence& sentence, int token_index) {
  const Token* t = sentence.token_at(token_index);
  if (t == nullptr) return kEmptyParameter;
  if (t->ner == "PERSON") {
    if (auto m = mention_at(sentence, token_index)) {
      std::string joined;
      for (int i = m->head_token; i <= m->last_token; ++i) {
        const Token* part = sentence.token_at(i);
        if (!joined.empty()) joined += "_";
        joined += lower(part->lemma.empty() ? part->surface : part->lemma);
      }
      return sanitize_token(joined);
    }
  }
  if (t->upos == "PRON") return sanitize_token(lower(t->surface));
  return sanitize_token(lower(t->lemma.empty() ? t->surface : t->lemma));
}

}  // namespace

std::vector<ExtractedEvent> extract_events(const ParsedSentence& sentence) {
  const auto& tokens = sentence.tokens;

  std::vector<int> heads;
  std::unordered_set<int> head_set;
  for (const Token& t : tokens) {
    if (!is_verbal(t)) continue;
    if (t.head == 0 || is_clause_link(base_deprel(t.deprel))) {
      heads.push_back(t.index);
      head_set.insert(t.index);
    }
  }
  std::sort(heads.begin(), heads.end());

  auto first_child = [&](int head, const std::string& base) -> int {
    for (const Token& t : tokens)
      if (t.head == head && base_deprel(t.deprel) == base) return t.index;
    return 0;
  };

  // Subject of the clause head, inherited along conj links when absent.
  auto find_subject = [&](int verb) -> int {
    int cur = verb;
    for (std::size_t guard = 0; guard <= tokens.size(); ++guard) {
      int subj = first_child(cur, "nsubj");
      if (subj != 0) return subj;
      const Token* t = sentence.token_at(cur);
      if (t == nullptr || base_deprel(t->deprel) != "conj" || t->head == 0) return 0;
      cur = t->head;
    }
    return 0;
  };

  // Relations already consumed by slot extraction or structurally inert.
  static const std::unordered_set<std::string> kClassified = {
      "nsubj", "obj",  "iobj",   "obl",   "ccomp",    "xcomp",    "conj",
      "cc",    "punct", "mark",  "case",  "det",      "aux",      "cop",
      "advmod", "expl", "discourse", "vocative", "amod", "nummod", "compound",
      "flat",  "appos", "fixed", "acl",   "nmod",     "root"};

  std::vector<ExtractedEvent> events;
  for (int verb : heads) {
    int subj = find_subject(verb);
    if (subj == 0) continue;  // s is mandatory

    // Conjoined subjects multiply the event, surface order.
    std::vector<int> subjects = {subj};
    for (const Token& t : tokens)
      if (t.head == subj && base_deprel(t.deprel) == "conj") subjects.push_back(t.index);
    std::sort(subjects.begin(), subjects.end());

    int obj = first_child(verb, "obj");
    std::vector<int> obls;
    for (const Token& t : tokens)
      if (t.head == verb && base_deprel(t.deprel) == "obl") obls.push_back(t.index);

    int o_token = obj;
    std::size_t obl_cursor = 0;
    if (o_token == 0 && !obls.empty()) o_token = obls[obl_cursor++];  // promoted PP object

    // Modifier priority: remaining obl, then iobj, then a clausal complement
    // that is not itself an event, then an unclassified nominal dependent.
    int m_token = 0;
    if (obl_cursor < obls.size()) m_token = obls[obl_cursor];
    if (m_token == 0) m_token = first_child(verb, "iobj");
    if (m_token == 0) {
      for (const Token& t : tokens) {
        std::string base = base_deprel(t.deprel);
        if (t.head == verb && (base == "ccomp" || base == "xcomp") && !head_set.count(t.index)) {
          m_token = t.index;
          break;
        }
      }
    }
    if (m_token == 0) {
      for (const Token& t : tokens) {
        if (t.head != verb || !is_nominal(t)) continue;
        if (kClassified.count(base_deprel(t.deprel))) continue;
        m_token = t.index;
        break;
      }
    }

    for (int s_token : subjects) {
      ExtractedEvent ev;
      ev.slot_token = {s_token, verb, o_token, m_token};
      ev.event.s = render_slot(sentence, s_token);
      ev.event.v = render_slot(sentence, verb);
      ev.event.o = render_slot(sentence, o_token);
      ev.event.m = render_slot(sentence, m_token);
      events.push_back(std::move(ev));
    }
  }
  return events;
}

std::optional<std::string> pronoun_abstraction(const std::string& word) {
  static const std::unordered_map<std::string, std::string> kTable = {
      {"he", "male.n.02"},      {"him", "male.n.02"},    {"his", "male.n.02"},
      {"himself", "male.n.02"}, {"she", "female.n.02"},  {"her", "female.n.02"},
      {"hers", "female.n.02"},  {"herself", "female.n.02"},
      {"it", "thing.n.08"},     {"its", "thing.n.08"},   {"itself", "thing.n.08"},
      {"they", "group.n.01"},   {"them", "group.n.01"},  {"their", "group.n.01"},
      {"theirs", "group.n.01"}, {"themselves", "group.n.01"},
  };
  auto it = kTable.find(lower(word));
  if (it == kTable.end()) return std::nullopt;
  return it->second;
}

void intern_sentence_mentions(const ParsedSentence& sentence, NeTable& table) {
  for (const PersonMention& m : person_mentions(sentence)) table.intern(m.name);
}

Event generalize_event(const ExtractedEvent& extracted, const ParsedSentence& sentence,
                       const RepresentationConfig& config, NeTable& ne_table,
                       const WordNetIndex* wn, const VerbNetIndex* vn) {
  Event out = extracted.event;
  if (config.word_mode == WordMode::kOriginal) return out;

  auto person_tag = [&](int token_index) -> std::optional<std::string> {
    const Token* t = sentence.token_at(token_index);
    if (t == nullptr || t->ner != "PERSON") return std::nullopt;
    auto mention = mention_at(sentence, token_index);
    const std::string name = mention ? mention->name : t->surface;
    return ne_tag(ne_table.intern(name));
  };

  auto generalize_slot = [&](const std::string& value, int token_index, bool verb_slot) {
    if (value == kEmptyParameter || already_generalized(value)) return value;
    if (auto tag = person_tag(token_index)) return *tag;
    if (config.word_mode == WordMode::kOriginalWithNe) return value;

    const Token* t = sentence.token_at(token_index);
    if (t != nullptr && t->ner != "O") return t->ner;  // non-person NE category
    const bool verbal = verb_slot || (t != nullptr && is_verbal(*t));
    if (verbal) {
      if (vn != nullptr)
        if (auto cls = vn->verb_class(value)) return *cls;
      return value;
    }
    if (t != nullptr && t->upos == "PRON") {
      if (auto abstraction = pronoun_abstraction(t->surface)) return *abstraction;
      if (auto abstraction = pronoun_abstraction(value)) return *abstraction;
      return value;
    }
    if (t == nullptr || t->upos == "NOUN" || t->upos == "PROPN") {
      if (wn != nullptr)
        if (auto synset = wn->hypernym_ancestor(value, 'n')) return synset->render();
      return value;
    }
    return value;
  };

  out.s = generalize_slot(out.s, extracted.slot_token[0], false);
  out.v = generalize_slot(out.v, extracted.slot_token[1], true);
  out.o = generalize_slot(out.o, extracted.slot_token[2], false);
  out.m = generalize_slot(out.m, extracted.slot_token[3], false);
  return out;
}

}  // namespace eventweave
