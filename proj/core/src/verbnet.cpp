#include "eventweave/verbnet.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace eventweave {

namespace {

// Pulls attr="value" out of a tag body; VerbNet class files are regular
// enough that a full XML parser buys nothing here.
std::optional<std::string> attribute(const std::string& tag, const std::string& attr) {
  std::size_t at = 0;
  const std::string needle = attr + "=\"";
  while ((at = tag.find(needle, at)) != std::string::npos) {
    bool boundary = at == 0 || std::isspace(static_cast<unsigned char>(tag[at - 1]));
    std::size_t value_at = at + needle.size();
    std::size_t close = tag.find('"', value_at);
    if (close == std::string::npos) return std::nullopt;
    if (boundary) return tag.substr(value_at, close - value_at);
    at = close + 1;
  }
  return std::nullopt;
}

void scan_class_file(const std::string& path, std::map<std::string, std::set<std::string>>* members,
                     std::set<std::string>* class_ids) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("verbnet: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::vector<std::string> id_stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    std::size_t end = text.find('>', pos);
    if (end == std::string::npos) break;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.rfind("VNCLASS", 0) == 0 || tag.rfind("VNSUBCLASS", 0) == 0) {
      auto id = attribute(tag, "ID");
      if (!id) throw std::runtime_error("verbnet: class tag without ID in " + path);
      id_stack.push_back(*id);
      class_ids->insert(*id);
    } else if (tag.rfind("/VNCLASS", 0) == 0 || tag.rfind("/VNSUBCLASS", 0) == 0) {
      if (!id_stack.empty()) id_stack.pop_back();
    } else if (tag.rfind("MEMBER", 0) == 0 && !id_stack.empty()) {
      auto name = attribute(tag, "name");
      if (!name) continue;
      std::string lemma = *name;
      lemma.erase(std::remove(lemma.begin(), lemma.end(), '?'), lemma.end());
      if (lemma.empty()) continue;
      for (char& c : lemma) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      (*members)[lemma].insert(id_stack.back());
    }
  }
}

}  // namespace

std::optional<std::string> VerbNetIndex::verb_class(const std::string& lemma) const {
  std::string key = lemma;
  for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto it = members_.find(key);
  if (it == members_.end() || it->second.empty()) return std::nullopt;
  return *it->second.begin();  // std::set orders ids, smallest wins
}

bool looks_like_verb_class(const std::string& token) {
  // ^[a-z_]+-[0-9.]+(-[0-9]+)*$
  std::size_t dash = token.find('-');
  if (dash == 0 || dash == std::string::npos || dash + 1 >= token.size()) return false;
  for (std::size_t i = 0; i < dash; ++i) {
    char c = token[i];
    if (!std::islower(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  bool saw_digit = false;
  for (std::size_t i = dash + 1; i < token.size(); ++i) {
    char c = token[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      saw_digit = true;
    } else if (c != '.' && c != '-') {
      return false;
    }
  }
  return saw_digit;
}

VerbNetIndex load_verbnet(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::runtime_error("verbnet: not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".xml")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("verbnet: no class files under " + dir);

  VerbNetIndex index;
  for (const std::string& path : files) scan_class_file(path, &index.members_, &index.class_ids_);
  return index;
}

}  // namespace eventweave
