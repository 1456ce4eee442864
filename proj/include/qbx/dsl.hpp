#pragma once

#include <optional>
#include <string>

#include "qbx/harada.hpp"
#include "qbx/matrix_model.hpp"

namespace qbx {

struct ParsedFile {
  std::string name;
  Presentation presentation;
  std::optional<BlockSpec> block;
  std::optional<StaircaseSpec> staircase;
};

// Grammar (see README): quiver NAME { vertices: ...; arrows: ...;
// relations: ...; } followed by optional extend(...) and staircase{...}
// clauses.  '#' starts a line comment.
ParsedFile parse(const std::string& text, const Field& f);
ParsedFile parse_file(const std::string& path, const Field& f);

// Canonical text; parse(emit_canonical(x)) reproduces x.
std::string emit_canonical(const ParsedFile& file);

// JSON with stable field names and format_version 1.  When bq is given the
// arrow kinds are delta/beta together with the alpha bijection.
std::string emit_json_presentation(const ParsedFile& file, const BlockQuiver* bq = nullptr);
std::string emit_json_report(const VerifyReport& rep, const Field& f);

// Deterministic DOT (sorted nodes and edges); block quivers get "(i,j)"
// display labels.
std::string emit_dot(const Quiver& q, const std::string& name, const BlockQuiver* bq = nullptr);

// Display name with unicode arrow glyphs for human-readable output:
// d_1_2 -> "δ_1_2", b_a11 -> "β_a11", plain labels unchanged.
std::string display_arrow_name(const std::string& label, const BlockQuiver* bq);

}  // namespace qbx
