#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace eventweave {

/// Placeholder for an unidentifiable object or modifier slot. Literal form
/// used on disk; logs render it as U+2205.
inline constexpr const char* kEmptyParameter = "EmptyParameter";

/// Anonymized person-name tag, "<NE>0", "<NE>1", ...
std::string ne_tag(int index);
/// Parses "<NE>n" back to n; nullopt for anything else.
std::optional<int> parse_ne_tag(const std::string& token);

/// Genre slot token, "GENRE_7"; distinct from any vocabulary word.
std::string genre_token(int genre);
std::optional<int> parse_genre_token(const std::string& token);

/// The 4-tuple event, optionally extended with a genre id as a fifth slot.
struct Event {
  std::string s;
  std::string v;
  std::string o = kEmptyParameter;
  std::string m = kEmptyParameter;
  std::optional<int> genre;

  std::array<const std::string*, 4> slots() const { return {&s, &v, &o, &m}; }
  std::vector<std::string> tokens() const;  // slot tokens, genre last if set
  std::string display() const;              // "<s, v, o, m>" with empty shown as ∅

  bool operator==(const Event&) const = default;
};

enum class WordMode { kOriginal, kOriginalWithNe, kGeneralized };
enum class NeScope { kPerSentence, kContinued };

struct RepresentationConfig {
  WordMode word_mode = WordMode::kOriginal;
  NeScope ne_numbering = NeScope::kPerSentence;
  bool include_genre = false;
};

/// Ordered PERSON-name -> dense index map. Indices are assigned by first
/// occurrence; the scope (one sentence, or one input-output pair) is the
/// caller's choice of when to start a fresh table.
class NeTable {
 public:
  int intern(const std::string& name);                    // assigns next index on miss
  std::optional<int> index_of(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Builds a table from PERSON mentions ordered by first occurrence.
NeTable assign_ne_indices(const std::vector<std::string>& ordered_names);

}  // namespace eventweave
