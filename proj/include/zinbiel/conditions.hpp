#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/datum.hpp"

namespace zinbiel {

enum class ConditionList { Z, ZZ, CZ, BZ, H };
const char* list_name(ConditionList l);

// Structures a condition may refer to. Primed symbols read Dp, r_k and s_k
// read rs; both may be null when the list does not use them.
struct ConditionInputs {
  const ExtendingDatum* D = nullptr;
  const ExtendingDatum* Dp = nullptr;
  const RSData* rs = nullptr;
};

// Why a transcribed equation is evaluated in a repaired form.
//  Syntax: the text does not parse (unbalanced delimiters, corrupted token);
//          the repair restores the evident intended expression.
//  Semantic: the text parses but is ill-typed or disagrees with the oracle;
//          the repair is a different equation.
enum class RepairKind { Syntax, Semantic };

class Formula;  // parsed, typechecked equation

// One evaluable instance: a displayed equation, instantiated at i = 0 or 1
// when it is stated for generic level i.
struct CompiledCondition {
  std::string id;     // e.g. "Z14", "Z1.2[i=0]", "H7[i=1]"
  std::string label;  // list label without instance suffix, e.g. "Z1"
  int sub = 0;        // equation number within the item, 1-based
  int level = -1;     // instantiated level, -1 when not generic
  std::string as_written;
  std::shared_ptr<const Formula> as_written_formula;  // null when unevaluable
  std::string as_written_error;                       // parse or type error
  std::optional<std::string> corrected;
  std::shared_ptr<const Formula> formula;  // the form that decides the verdict
  RepairKind repair_kind = RepairKind::Syntax;
  std::string repair_reason;
  bool suspect() const { return corrected.has_value() && repair_kind == RepairKind::Semantic; }
};

const std::vector<CompiledCondition>& compiled_conditions(ConditionList l);

struct ConditionOutcome {
  ConditionReport report;       // verdict of the evaluated (corrected) forms
  bool as_written_ok = true;    // verdict using every evaluable as-written form instead
  std::vector<std::string> disagreeing;  // suspect IDs whose as-written verdict differs
};

// Evaluates every condition of a list on all basis tuples of its variables.
ConditionOutcome evaluate_conditions(ConditionList l, const ConditionInputs& in,
                                     const CheckOptions& opt = {});

// Parses one equation (after instantiating generic level i when given) and
// evaluates it; for tests and ad-hoc checks. Throws ParseError on bad input.
ConditionReport evaluate_formula(const std::string& id, const std::string& latex,
                                 const ConditionInputs& in, const CheckOptions& opt = {});

// Parse and typecheck without evaluating; returns the error text or "".
std::string formula_error(const std::string& latex);

}  // namespace zinbiel
