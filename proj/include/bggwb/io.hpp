#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bggwb/bgg.hpp"
#include "bggwb/emodule.hpp"
#include "bggwb/filtered.hpp"

namespace bggwb {

/// JSON workbench files: schema "emodule/1", "scomplex/1" or "rcomplex/1".
using WorkbenchObject = std::variant<GradedEModule, LinearSComplex, FilteredFreeComplex>;

/// Parses and validates. A field override re-reads every scalar in that
/// field (for the fp:<p> sweeps). ParseError carries line/column for syntax
/// errors; InvariantViolation reports failed axioms.
WorkbenchObject parse_workbench(std::string_view text, std::optional<Field> field_override = std::nullopt);
WorkbenchObject parse_file(const std::string& path, std::optional<Field> field_override = std::nullopt);

GradedEModule read_emodule_file(const std::string& path, std::optional<Field> field_override = std::nullopt);
FilteredFreeComplex read_rcomplex_file(const std::string& path, std::optional<Field> field_override = std::nullopt);

/// Canonical text: sorted keys, lowest-terms scalars, graded-lex polynomials.
std::string serialize(const GradedEModule& m);
std::string serialize(const LinearSComplex& l);
std::string serialize(const FilteredFreeComplex& k);
std::string serialize(const WorkbenchObject& o);

std::string schema_name(const WorkbenchObject& o);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bggwb
