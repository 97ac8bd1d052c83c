#include "eventweave/sentgen.hpp"

#include "eventweave/eventify.hpp"

namespace eventweave {

std::vector<std::string> GeneralizedSentence::restore() const {
  std::vector<std::string> out = tokens;
  for (const NounOccurrence& occ : noun_table)
    if (occ.position >= 0 && occ.position < static_cast<int>(out.size()))
      out[static_cast<std::size_t>(occ.position)] = occ.original;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (auto idx = parse_ne_tag(out[i]))
      if (*idx >= 0 && *idx < static_cast<int>(ne_table.names().size()))
        out[i] = ne_table.names()[static_cast<std::size_t>(*idx)];
  return out;
}

void WorkingMemory::observe_name(int index, const std::string& name) { names_[index] = name; }

void WorkingMemory::observe_noun(const std::string& synset, const std::string& noun) {
  nouns_[synset] = noun;
}

void WorkingMemory::ingest(const GeneralizedSentence& sentence) {
  const auto& names = sentence.ne_table.names();
  for (std::size_t i = 0; i < names.size(); ++i) observe_name(static_cast<int>(i), names[i]);
  for (const auto& occ : sentence.noun_table) observe_noun(occ.placeholder, occ.original);
}

std::optional<std::string> WorkingMemory::name_for(int index) const {
  auto it = names_.find(index);
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> WorkingMemory::noun_for(const std::string& synset) const {
  auto it = nouns_.find(synset);
  if (it == nouns_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> merged_surface_tokens(const ParsedSentence& sentence) {
  std::vector<std::string> out;
  const auto mentions = person_mentions(sentence);
  std::size_t mention_at = 0;
  for (std::size_t i = 0; i < sentence.tokens.size();) {
    const Token& t = sentence.tokens[i];
    if (mention_at < mentions.size() && mentions[mention_at].head_token == t.index) {
      out.push_back(mentions[mention_at].name);
      i += static_cast<std::size_t>(mentions[mention_at].last_token -
                                    mentions[mention_at].head_token) + 1;
      ++mention_at;
    } else {
      out.push_back(t.surface);
      ++i;
    }
  }
  return out;
}

GeneralizedSentence generalize_sentence(const ParsedSentence& sentence, const WordNetIndex* wn,
                                        NeTable* shared_table) {
  GeneralizedSentence out;
  NeTable local;
  NeTable& table = shared_table != nullptr ? *shared_table : local;

  const auto mentions = person_mentions(sentence);
  std::size_t mention_at = 0;
  for (std::size_t i = 0; i < sentence.tokens.size();) {
    const Token& t = sentence.tokens[i];
    if (mention_at < mentions.size() && mentions[mention_at].head_token == t.index) {
      out.tokens.push_back(ne_tag(table.intern(mentions[mention_at].name)));
      i += static_cast<std::size_t>(mentions[mention_at].last_token -
                                    mentions[mention_at].head_token) + 1;
      ++mention_at;
      continue;
    }
    if (t.ner != "O") {
      out.noun_table.push_back({static_cast<int>(out.tokens.size()), t.ner, t.surface});
      out.tokens.push_back(t.ner);
      ++i;
      continue;
    }
    if ((t.upos == "NOUN" || t.upos == "PROPN") && wn != nullptr) {
      const std::string lemma = t.lemma.empty() ? t.surface : t.lemma;
      if (auto synset = wn->hypernym_ancestor(lemma, 'n')) {
        out.noun_table.push_back(
            {static_cast<int>(out.tokens.size()), synset->render(), t.surface});
        out.tokens.push_back(synset->render());
        ++i;
        continue;
      }
    }
    out.tokens.push_back(t.surface);
    ++i;
  }
  out.ne_table = table;
  return out;
}

std::vector<std::string> fill_placeholders(const std::vector<std::string>& generated,
                                           WorkingMemory& memory) {
  std::vector<std::string> out;
  out.reserve(generated.size());
  for (const std::string& token : generated) {
    if (auto idx = parse_ne_tag(token)) {
      auto name = memory.name_for(*idx);
      if (!name) {
        name = "someone";
        memory.observe_name(*idx, *name);
      }
      out.push_back(*name);
      continue;
    }
    if (auto noun = memory.noun_for(token)) {
      out.push_back(*noun);
      continue;
    }
    if (auto synset = SynsetId::parse(token)) {
      // Fall back to the synset's own head lemma; multiword lemmas split.
      std::string word;
      for (char c : synset->lemma) {
        if (c == '_') {
          if (!word.empty()) out.push_back(word);
          word.clear();
        } else {
          word += c;
        }
      }
      if (!word.empty()) out.push_back(word);
      continue;
    }
    out.push_back(token);
  }
  return out;
}

}  // namespace eventweave
