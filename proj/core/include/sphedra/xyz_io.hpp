#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphedra/vec3.hpp"

namespace sphedra {

// Malformed coordinate text; `line` is 1-based, or 0 when the failure is
// not tied to a specific line (e.g. too few points overall).
class XyzParseError : public std::runtime_error {
 public:
  XyzParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Reads "x y z" triples, one per line. Lines starting with '#' and blank
// lines are ignored. Throws XyzParseError on malformed lines or when fewer
// than 4 points remain.
std::vector<Vec3> read_xyz(std::istream& in);

// Writes one "x y z" line per point with 15 decimal places.
void write_xyz(std::ostream& out, std::span<const Vec3> points);

}  // namespace sphedra
