#include "eventweave/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eventweave {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_offset(const std::string& s, const std::string& file) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error("wordnet: corrupt offset '" + s + "' in " + file);
  return v;
}

int parse_hex(const std::string& s, const std::string& file) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error("wordnet: corrupt hex field '" + s + "' in " + file);
  return v;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("wordnet: cannot open " + path);
  return in;
}

bool is_hypernym_symbol(const std::string& sym) { return sym == "@" || sym == "@i"; }

struct Detachment {
  const char* suffix;
  const char* replacement;
};

constexpr Detachment kNounDetachments[] = {
    {"s", ""},     {"ses", "s"},  {"xes", "x"}, {"zes", "z"},
    {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"},
};
constexpr Detachment kVerbDetachments[] = {
    {"s", ""},   {"ies", "y"}, {"es", "e"}, {"es", ""},
    {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""},
};

// data.<pos> line:
//   offset lex_filenum ss_type w_cnt word lex_id [...] p_cnt ptr... | gloss
void parse_data_file_impl(const std::string& path,
                          std::unordered_map<std::uint64_t, WordNetIndex::Synset>* synsets) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == ' ') continue;  // license header block
    std::size_t bar = line.find('|');
    std::string body = bar == std::string::npos ? line : line.substr(0, bar);
    std::vector<std::string> f = split_ws(body);
    auto corrupt = [&](const char* what) -> std::runtime_error {
      return std::runtime_error("wordnet: " + path + " line " + std::to_string(line_no) +
                                ": " + what);
    };
    if (f.size() < 5) throw corrupt("short data line");
    std::uint64_t offset = parse_offset(f[0], path);
    int w_cnt = parse_hex(f[3], path);
    if (w_cnt < 1 || 4 + 2 * static_cast<std::size_t>(w_cnt) >= f.size() + 1)
      throw corrupt("bad word count");
    WordNetIndex::Synset synset;
    for (int w = 0; w < w_cnt; ++w) synset.words.push_back(f[4 + 2 * static_cast<std::size_t>(w)]);
    std::size_t p_pos = 4 + 2 * static_cast<std::size_t>(w_cnt);
    if (p_pos >= f.size()) throw corrupt("missing pointer count");
    int p_cnt = 0;
    {
      const std::string& s = f[p_pos];
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), p_cnt);
      if (ec != std::errc() || p != s.data() + s.size()) throw corrupt("bad pointer count");
    }
    std::size_t cursor = p_pos + 1;
    for (int p = 0; p < p_cnt; ++p) {
      if (cursor + 4 > f.size()) throw corrupt("truncated pointer");
      const std::string& sym = f[cursor];
      const std::string& target = f[cursor + 1];
      if (is_hypernym_symbol(sym)) synset.hypernyms.push_back(parse_offset(target, path));
      cursor += 4;  // symbol offset pos source/target
    }
    (*synsets)[offset] = std::move(synset);
  }
}

// index.<pos> line:
//   lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt tagsense_cnt offset...
void parse_index_file_impl(
    const std::string& path,
    std::unordered_map<std::string, std::vector<std::uint64_t>>* lemma_offsets) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == ' ') continue;
    std::vector<std::string> f = split_ws(line);
    auto corrupt = [&](const char* what) -> std::runtime_error {
      return std::runtime_error("wordnet: " + path + " line " + std::to_string(line_no) +
                                ": " + what);
    };
    if (f.size() < 6) throw corrupt("short index line");
    const std::string& lemma = f[0];
    int synset_cnt = 0, p_cnt = 0;
    {
      auto [p, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), synset_cnt);
      if (ec != std::errc()) throw corrupt("bad synset count");
    }
    {
      auto [p, ec] = std::from_chars(f[3].data(), f[3].data() + f[3].size(), p_cnt);
      if (ec != std::errc()) throw corrupt("bad pointer count");
    }
    std::size_t offsets_at = 4 + static_cast<std::size_t>(p_cnt) + 2;  // skip sense/tagsense counts
    if (offsets_at + static_cast<std::size_t>(synset_cnt) > f.size())
      throw corrupt("truncated offset list");
    std::vector<std::uint64_t> offsets;
    offsets.reserve(synset_cnt);
    for (int i = 0; i < synset_cnt; ++i)
      offsets.push_back(parse_offset(f[offsets_at + static_cast<std::size_t>(i)], path));
    (*lemma_offsets)[lemma] = std::move(offsets);
  }
}

void parse_exc_file_impl(const std::string& path,
                         std::unordered_map<std::string, std::string>* exceptions) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == ' ') continue;
    std::vector<std::string> f = split_ws(line);
    if (f.size() < 2) continue;
    exceptions->emplace(f[0], f[1]);  // first listed lemma wins
  }
}

}  // namespace

std::string SynsetId::render() const {
  std::ostringstream out;
  out << lemma << '.' << pos << '.';
  if (sense < 10) out << '0';
  out << sense;
  return out.str();
}

std::optional<SynsetId> SynsetId::parse(const std::string& rendered) {
  // ^[a-z0-9_'.-]+\.[nvar]\.[0-9]{2}$
  if (rendered.size() < 6) return std::nullopt;
  std::size_t last_dot = rendered.rfind('.');
  if (last_dot == std::string::npos || last_dot + 3 != rendered.size()) return std::nullopt;
  if (!std::isdigit(static_cast<unsigned char>(rendered[last_dot + 1])) ||
      !std::isdigit(static_cast<unsigned char>(rendered[last_dot + 2])))
    return std::nullopt;
  if (last_dot < 2 || rendered[last_dot - 2] != '.') return std::nullopt;
  char pos = rendered[last_dot - 1];
  if (pos != 'n' && pos != 'v' && pos != 'a' && pos != 'r') return std::nullopt;
  std::string lemma = rendered.substr(0, last_dot - 2);
  if (lemma.empty()) return std::nullopt;
  for (char c : lemma) {
    bool ok = std::islower(static_cast<unsigned char>(c)) ||
              std::isdigit(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
              c == '.' || c == '-';
    if (!ok) return std::nullopt;
  }
  SynsetId id;
  id.lemma = lemma;
  id.pos = pos;
  id.sense = (rendered[last_dot + 1] - '0') * 10 + (rendered[last_dot + 2] - '0');
  return id;
}

bool looks_like_synset(const std::string& token) { return SynsetId::parse(token).has_value(); }

const WordNetIndex::PosIndex* WordNetIndex::pos_index(char pos) const {
  if (pos == 'n') return &nouns_;
  if (pos == 'v') return &verbs_;
  return nullptr;
}

SynsetId WordNetIndex::render_synset(const PosIndex& idx, std::uint64_t offset, char pos) const {
  auto it = idx.synsets.find(offset);
  SynsetId id;
  id.pos = pos;
  if (it == idx.synsets.end() || it->second.words.empty()) return id;
  id.lemma = lower(it->second.words.front());
  id.sense = 1;
  auto li = idx.lemma_offsets.find(id.lemma);
  if (li != idx.lemma_offsets.end()) {
    const auto& offsets = li->second;
    auto pos_it = std::find(offsets.begin(), offsets.end(), offset);
    if (pos_it != offsets.end()) id.sense = static_cast<int>(pos_it - offsets.begin()) + 1;
  }
  return id;
}

std::optional<SynsetId> WordNetIndex::first_synset(const std::string& lemma, char pos) const {
  const PosIndex* idx = pos_index(pos);
  if (idx == nullptr) return std::nullopt;
  auto it = idx->lemma_offsets.find(lower(lemma));
  if (it == idx->lemma_offsets.end() || it->second.empty()) return std::nullopt;
  return render_synset(*idx, it->second.front(), pos);
}

std::optional<SynsetId> WordNetIndex::hypernym_ancestor(const std::string& lemma, char pos,
                                                        int levels) const {
  const PosIndex* idx = pos_index(pos);
  if (idx == nullptr) return std::nullopt;
  std::string key = lower(lemma);
  auto it = idx->lemma_offsets.find(key);
  if (it == idx->lemma_offsets.end()) {
    auto lemmatized = lemmatize(key, pos);
    if (!lemmatized) return std::nullopt;
    it = idx->lemma_offsets.find(*lemmatized);
    if (it == idx->lemma_offsets.end()) return std::nullopt;
  }
  if (it->second.empty()) return std::nullopt;

  std::uint64_t cur = it->second.front();
  for (int step = 0; step < levels; ++step) {
    auto si = idx->synsets.find(cur);
    if (si == idx->synsets.end() || si->second.hypernyms.empty()) break;
    std::uint64_t next = si->second.hypernyms.front();
    auto ni = idx->synsets.find(next);
    if (ni == idx->synsets.end()) break;
    // Never step onto the noun root; "entity" is too general a label.
    if (!ni->second.words.empty() && lower(ni->second.words.front()) == "entity" &&
        ni->second.hypernyms.empty())
      break;
    cur = next;
  }
  return render_synset(*idx, cur, pos);
}

std::optional<std::string> WordNetIndex::lemmatize(const std::string& word, char pos) const {
  const PosIndex* idx = pos_index(pos);
  if (idx == nullptr) return std::nullopt;
  std::string key = lower(word);
  if (idx->lemma_offsets.count(key)) return key;
  auto exc = idx->exceptions.find(key);
  if (exc != idx->exceptions.end()) return exc->second;

  auto try_rules = [&](const auto& rules) -> std::optional<std::string> {
    for (const Detachment& rule : rules) {
      std::string suffix = rule.suffix;
      if (key.size() <= suffix.size()) continue;
      if (key.compare(key.size() - suffix.size(), suffix.size(), suffix) != 0) continue;
      std::string candidate = key.substr(0, key.size() - suffix.size()) + rule.replacement;
      if (idx->lemma_offsets.count(candidate)) return candidate;
    }
    return std::nullopt;
  };
  if (pos == 'n') return try_rules(kNounDetachments);
  if (pos == 'v') return try_rules(kVerbDetachments);
  return std::nullopt;
}

bool WordNetIndex::has_lemma(const std::string& lemma, char pos) const {
  const PosIndex* idx = pos_index(pos);
  return idx != nullptr && idx->lemma_offsets.count(lower(lemma)) > 0;
}

std::size_t WordNetIndex::synset_count() const {
  return nouns_.synsets.size() + verbs_.synsets.size();
}

WordNetIndex load_wordnet(const std::string& dir) {
  WordNetIndex index;
  parse_data_file_impl(dir + "/data.noun", &index.nouns_.synsets);
  parse_index_file_impl(dir + "/index.noun", &index.nouns_.lemma_offsets);
  parse_exc_file_impl(dir + "/noun.exc", &index.nouns_.exceptions);
  parse_data_file_impl(dir + "/data.verb", &index.verbs_.synsets);
  parse_index_file_impl(dir + "/index.verb", &index.verbs_.lemma_offsets);
  parse_exc_file_impl(dir + "/verb.exc", &index.verbs_.exceptions);
  return index;
}

}  // namespace eventweave
