#include "eventweave/event.hpp"

#include <cctype>

namespace eventweave {

namespace {
constexpr const char* kNePrefix = "<NE>";
constexpr const char* kGenrePrefix = "GENRE_";

std::optional<int> parse_suffix_int(const std::string& token, const std::string& prefix) {
  if (token.size() <= prefix.size() || token.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  int value = 0;
  for (std::size_t i = prefix.size(); i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return std::nullopt;
    value = value * 10 + (token[i] - '0');
  }
  return value;
}
}  // namespace

std::string ne_tag(int index) { return kNePrefix + std::to_string(index); }

std::optional<int> parse_ne_tag(const std::string& token) {
  return parse_suffix_int(token, kNePrefix);
}

std::string genre_token(int genre) { return kGenrePrefix + std::to_string(genre); }

std::optional<int> parse_genre_token(const std::string& token) {
  return parse_suffix_int(token, kGenrePrefix);
}

std::vector<std::string> Event::tokens() const {
  std::vector<std::string> out = {s, v, o, m};
  if (genre) out.push_back(genre_token(*genre));
  return out;
}

std::string Event::display() const {
  auto show = [](const std::string& slot) {
    return slot == kEmptyParameter ? std::string("∅") : slot;
  };
  std::string out = "⟨" + show(s) + ", " + show(v) + ", " + show(o) + ", " + show(m);
  if (genre) out += ", " + std::to_string(*genre);
  out += "⟩";
  return out;
}

int NeTable::intern(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  int idx = static_cast<int>(names_.size());
  names_.push_back(name);
  index_.emplace(name, idx);
  return idx;
}

std::optional<int> NeTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NeTable assign_ne_indices(const std::vector<std::string>& ordered_names) {
  NeTable table;
  for (const std::string& name : ordered_names) table.intern(name);
  return table;
}

}  // namespace eventweave
