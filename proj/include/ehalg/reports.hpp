#pragma once

#include <string>
#include <vector>

#include "ehalg/io.hpp"

namespace ehalg {

struct Limits {
  std::size_t guard_dim = 64;     // crossed product dimension
  std::size_t bisect_guard = 12;  // groupoid elements for bisection enumeration
  std::size_t oracle_guard = 6;   // algebra dimension for exhaustive ideal enumeration
};

// Outcome of one command. `ok` is false when the input was checked and found
// invalid; hard failures (parse, guard, verification) are thrown as Error.
struct Report {
  bool ok = true;
  std::string json;
  std::string text;
};

Report cmd_validate(const SystemFile& file);
Report cmd_validate_groupoid(const GroupoidFile& file);
Report cmd_build(const SystemFile& file, const Limits& limits);
Report cmd_germs(const SystemFile& file, const Limits& limits);
Report cmd_decompose(const SystemFile& file, const std::vector<std::string>& generators, const Limits& limits);
Report cmd_isocheck(const SystemFile& file, const Limits& limits);
Report cmd_bisect(const GroupoidFile& file, const Limits& limits);
Report cmd_oracle(const SystemFile& file, const Limits& limits);
// Built-in fixtures over F2: validate, build, isocheck and oracle for each
// system, bisect for each groupoid, and the nilpotent bundle rejection.
Report cmd_fixtures(const Limits& limits);

// Text form of a vector in a labeled basis, e.g. "a:1 + 2·b:g".
std::string format_combination(const Field& f, const std::vector<std::string>& labels, const Vec& v);

}  // namespace ehalg
