#include "sphedra/xyz_io.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace sphedra {

namespace {

std::string describe(int line, const std::string& what) {
  if (line <= 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

bool blank_or_comment(const std::string& line) {
  for (const char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#';
  }
  return true;
}

}  // namespace

XyzParseError::XyzParseError(int line, const std::string& what)
    : std::runtime_error(describe(line, what)), line_(line) {}

std::vector<Vec3> read_xyz(std::istream& in) {
  std::vector<Vec3> points;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (blank_or_comment(line)) continue;
    std::istringstream fields(line);
    Vec3 p;
    if (!(fields >> p.x >> p.y >> p.z)) {
      throw XyzParseError(number, "expected three decimal coordinates");
    }
    std::string extra;
    if (fields >> extra) {
      throw XyzParseError(number, "unexpected trailing field '" + extra + "'");
    }
    points.push_back(p);
  }
  if (points.size() < 4) throw XyzParseError(0, "need at least 4 points");
  return points;
}

void write_xyz(std::ostream& out, std::span<const Vec3> points) {
  char buffer[96];
  for (const auto& p : points) {
    std::snprintf(buffer, sizeof(buffer), "%.15f %.15f %.15f", p.x, p.y, p.z);
    out << buffer << '\n';
  }
}

}  // namespace sphedra
