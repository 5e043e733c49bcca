#pragma once

#include <string>

#include "sasaki/oml.hpp"
#include "sasaki/sasaki_filters.hpp"

namespace sasaki {

/// Graphviz Hasse diagram, bottom to top, atoms filled. Nodes and edges are
/// emitted in index order so output is deterministic.
std::string oml_to_dot(const FiniteOml& L, const std::string& name = "L");

/// Hasse diagram of SF(L) under reverse inclusion; the partial states (atoms
/// of SF) are filled.
std::string sf_to_dot(const SfLattice& sfl, const std::string& name = "SF");

/// Writes `text` to `path`; throws Error(Io).
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sasaki
