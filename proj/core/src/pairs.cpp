#include "eventweave/pairs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eventweave {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(std::move(token));
  return out;
}

void save_pairs_tsv(const std::vector<SequencePair>& pairs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("pairs: cannot write " + path);
  for (const SequencePair& p : pairs)
    out << join_tokens(p.input) << '\t' << join_tokens(p.output) << '\n';
}

std::vector<SequencePair> load_pairs_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("pairs: cannot open " + path);
  std::vector<SequencePair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw std::runtime_error("pairs: " + path + " line " + std::to_string(line_no) +
                               ": expected exactly two tab-separated columns");
    SequencePair p;
    p.input = split_tokens(line.substr(0, tab));
    p.output = split_tokens(line.substr(tab + 1));
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void save_manifest(const PairsManifest& manifest, const std::string& path) {
  nlohmann::json j;
  j["kind"] = manifest.kind;
  j["condition"] = manifest.condition;
  j["condition_name"] = manifest.condition_name;
  j["pair_count"] = manifest.pair_count;
  j["strip_genre"] = manifest.strip_genre;
  j["slots_per_event"] = manifest.slots_per_event;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("pairs: cannot write " + path);
  out << j.dump(2) << '\n';
}

PairsManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("pairs: cannot open " + path);
  nlohmann::json j;
  in >> j;
  PairsManifest m;
  m.kind = j.value("kind", "");
  m.condition = j.value("condition", -1);
  m.condition_name = j.value("condition_name", "");
  m.pair_count = j.value("pair_count", std::size_t{0});
  m.strip_genre = j.value("strip_genre", false);
  m.slots_per_event = j.value("slots_per_event", 4);
  return m;
}

}  // namespace eventweave
