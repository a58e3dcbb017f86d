#pragma once

#include <string>

#include "xmodkit/groupoid.hpp"

namespace xmodkit {

/// Objects as nodes, morphisms as edges d0 -> d1 labeled by index, in
/// index order. Identities are left out unless asked for.
inline std::string to_dot(const Groupoid& g, bool include_identities = false,
                          const std::string& name = "G") {
  std::string out = "digraph \"" + name + "\" {\n";
  for (Obj x = 0; x < g.num_objects(); ++x) out += "  " + std::to_string(x) + ";\n";
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    if (!include_identities && g.is_identity(m)) continue;
    out += "  " + std::to_string(g.d0(m)) + " -> " + std::to_string(g.d1(m)) + " [label=\"" +
           std::to_string(m) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace xmodkit
