#pragma once

#include <vector>

namespace zinbiel::detail {

struct RawCondition {
  const char* list;  // "Z", "ZZ", "H", "CZ", "BZ"
  const char* id;
  int sub;           // equation number within the item
  const char* text;  // LaTeX as displayed
};

const std::vector<RawCondition>& raw_conditions();

// Repaired forms, keyed by (id, sub).
struct RawRepair {
  const char* id;
  int sub;
  bool suspect;  // flagged in reports when the as-written form disagrees or cannot be evaluated
  const char* text;
  const char* reason;
};

const std::vector<RawRepair>& raw_repairs();

}  // namespace zinbiel::detail
