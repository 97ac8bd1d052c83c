#pragma once

#include <string>

namespace eventweave {

/// Best-effort removal of residual wiki markup from story text:
/// `[[target|label]]` -> `label`, `[[x]]` -> `x`, html tags stripped,
/// parenthetical cast annotations after a capitalized name removed,
/// whitespace collapsed. Idempotent.
std::string clean_text(const std::string& raw);

}  // namespace eventweave
