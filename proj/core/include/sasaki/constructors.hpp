#pragma once

#include <string>
#include <vector>

#include "sasaki/oml.hpp"

namespace sasaki {

/// The powerset lattice of k atoms with set complement. 1 <= k <= 10.
FiniteOml boolean_algebra(std::size_t k);

/// MO(k): bot, top and k complementary atom pairs a, a', b, b', ...
FiniteOml mo(std::size_t k);

/// Blocks of mutually orthogonal atoms, pasted along shared atoms.
struct GreechieDiagram {
  std::vector<std::vector<std::string>> blocks;
};

/// One block per line, whitespace separated atom labels, '#' starts a comment.
GreechieDiagram parse_greechie(const std::string& text);

/// Pastes the boolean blocks of `g` and validates the result. Throws
/// Error(InvalidDiagram) for an illegal diagram and
/// Error(PastingNotOrthomodular) when the pasting fails verify_oml; the
/// message carries the violated axiom and its witnesses.
FiniteOml from_greechie(const GreechieDiagram& g);

/// The non-orthomodular hexagon ortholattice as raw tables (0, a, b, b', a', 1
/// with a < b' and b < a').
OmlTables hexagon_tables();

}  // namespace sasaki
