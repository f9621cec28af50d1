#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ehalg/germoid.hpp"

namespace ehalg {

// Parsed but not yet validated system file. The field line is optional.
struct SystemFile {
  std::optional<Field> field;
  SystemSpec spec;
};

struct GroupoidFile {
  std::optional<Field> field;
  FiniteGroupoid groupoid;
};

// Parse errors carry "line L, column C: ..." in their message.
SystemFile parse_system(std::string_view text);
GroupoidFile parse_groupoid(std::string_view text);
std::string serialize_system(const SystemFile& file);
std::string serialize_groupoid(const GroupoidFile& file);

std::string read_file(const std::string& path);
// True when the first key after the format line is "groupoid".
bool looks_like_groupoid(std::string_view text);

// "F p" or "Q", accepted back by Field::parse.
std::string field_spec(const Field& f);

// A crossed-product element written as terms joined by '+' or '-'. A term is
// [coeff ('·' | '*')] point:elem for delta_point Delta_elem, or
// [coeff ('·' | '*')] (Δ_elem | D_elem) for the indicator of ran(elem) times
// Delta_elem. Coefficients are integers or fractions.
Vec parse_element(const CrossedProduct& cp, std::string_view text);

}  // namespace ehalg
