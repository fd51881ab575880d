#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dlf/complex.hpp"
#include "dlf/hasse.hpp"
#include "dlf/homotopy.hpp"
#include "dlf/linefield.hpp"
#include "dlf/radial.hpp"

// Text formats (.cplx, .fld), JSON and DOT export. Grammar in docs/formats.md.
namespace dlf::io {

enum class FormatErrc { ParseError, ValidationError };

class FormatError : public std::runtime_error {
 public:
  // `detail` names the underlying failure, e.g. "EdgeSideReused".
  FormatError(FormatErrc kind, std::string detail, int line, int column, const std::string& reason);

  FormatErrc kind() const { return kind_; }
  const std::string& detail() const { return detail_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  FormatErrc kind_;
  std::string detail_;
  int line_;
  int column_;
  std::string reason_;
};

struct NamedComplex {
  std::string name;
  CellComplex complex;
};

/// Parses a .cplx document. Faces are taken from `face` lines; a document
/// with `rotation` lines and no faces is traced with faces_from_rotation, and
/// one with both must agree.
NamedComplex parse_complex(std::string_view text);

/// Canonical .cplx text. The rotation block is written only on request.
std::string serialize_complex(const CellComplex& k, const std::string& name = "", bool with_rotation = false);

struct NamedField {
  std::string name;
  LineField field;
};

/// Parses a .fld document. A `complex <path>` reference is resolved against
/// `base_dir`; `complex inline` is followed by .cplx lines up to `end`.
NamedField parse_field(std::string_view text, const std::filesystem::path& base_dir = {});

/// .fld text with the complex inlined.
std::string serialize_field(const LineField& field, const std::string& name = "");

std::string read_file(const std::filesystem::path& path);

// "+3" / "-3"
std::string dart_token(Dart d);

nlohmann::json to_json(const CellComplex& k);
nlohmann::json to_json(const LineField& field);
nlohmann::json to_json(const IndexReport& report);
nlohmann::json matching_to_json(const HasseDiagram& h, const Matching& m);
nlohmann::json to_json(const ReducedField& r);
nlohmann::json to_json(const EmbeddedBipartiteGraph& g);
nlohmann::json to_json(const FormatError& e);

/// Hasse diagram by dimension rank; matched edges drawn bold and reversed.
std::string hasse_to_dot(const HasseDiagram& h, const Matching& m = {});
/// Reduced Hasse diagram with the line-field index on every node.
std::string reduced_to_dot(const ReducedField& r);
/// Radial graph: vertex-cells as circles, face-cells as boxes.
std::string radial_to_dot(const EmbeddedBipartiteGraph& g);

}  // namespace dlf::io
