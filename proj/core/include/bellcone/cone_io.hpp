#pragma once

#include "bellcone/cone.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace bellcone {

using AnyCone = std::variant<ConeVRep, ConeHRep>;

/// Text format:
///   bellcone-cone v1; dim=<int>; rep=<V|H>; count=<int>
///   <rational> <rational> ...      (one vector per line)
std::string format_cone(const ConeVRep& c);
std::string format_cone(const ConeHRep& c);

AnyCone parse_cone(std::istream& in);
AnyCone parse_cone_string(const std::string& text);
AnyCone read_cone_file(const std::string& path);

}  // namespace bellcone
