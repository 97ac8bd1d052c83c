#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

namespace eventweave {

/// Verb lemma -> VerbNet class id ("escape-51.1", "contribute-13.2-2").
/// Members declared inside a subclass map to the subclass id. A lemma in
/// several classes resolves to the lexicographically smallest id.
class VerbNetIndex {
 public:
  std::optional<std::string> verb_class(const std::string& lemma) const;

  std::size_t class_count() const { return class_ids_.size(); }
  std::size_t member_count() const { return members_.size(); }

 private:
  friend VerbNetIndex load_verbnet(const std::string& dir);
  std::map<std::string, std::set<std::string>> members_;  // lemma -> class ids
  std::set<std::string> class_ids_;
};

/// True for strings shaped like a VerbNet class id.
bool looks_like_verb_class(const std::string& token);

/// Scans every *.xml class file under `dir` (VerbNet 3.2 layout).
VerbNetIndex load_verbnet(const std::string& dir);

}  // namespace eventweave
