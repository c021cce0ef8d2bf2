#ifndef NHM_IO_HPP
#define NHM_IO_HPP

#include <string>

#include "nhm/foliation.hpp"
#include "nhm/quotient.hpp"

namespace nhm {

/// JSON document formats. Numbers travel as exact strings ("p/q", "n",
/// "inf", "-inf"); plain JSON integers are accepted on input. Unknown keys
/// are rejected. Emission is canonical: identical values give identical
/// bytes.

Presentation parse_presentation(const std::string& text);
std::string emit_presentation(const Presentation& p);

ObstacleSet parse_obstacles(const std::string& text);
std::string emit_obstacles(const ObstacleSet& q);

QuotientGraph parse_quotient(const std::string& text);
std::string emit_quotient(const QuotientGraph& qg);

/// Graphviz rendering: vertices as nodes, OPEN ends as point-shaped phantom
/// nodes labeled "open", circle components as one self-descriptive node.
std::string emit_quotient_dot(const QuotientGraph& qg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace nhm

#endif
