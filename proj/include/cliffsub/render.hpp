#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cliffsub/classify.hpp"

namespace cliffsub {

using Json = nlohmann::ordered_json;

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

std::string table_text(const Table& table);
Json table_json(const Table& table);
/// Cells of build_table(3) that differ from the hand-tabulated fixture,
/// as "row*col: got X, expected Y".
std::vector<std::string> table_mismatches(const Table& table);

/// "a1 = 1 + a17*k, a2 = e1 + a27*k, ..." for a basis of g(n).
std::string basis_text(const CanonicalBasis& cb, int n);
/// Same with coordinate names g1..gN, for dimensions that are not 2^n.
std::string basis_text(const CanonicalBasis& cb);

/// "a1a2" for a source condition, "q1" for the first derived cofactor.
std::string source_label(const ConditionSet& cs, std::size_t source);
/// "pair-combination [a3a4, a4a3]: a78 = 0 => a78 := 0"
std::string step_text(const ConditionSet& cs, const Step& step);

std::string conditions_text(const ConditionSet& cs);
Json conditions_json(const ConditionSet& cs);

std::string classification_text(const ClassificationResult& result);
Json classification_json(const ClassificationResult& result);

}  // namespace cliffsub
