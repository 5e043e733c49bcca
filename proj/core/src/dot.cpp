#include "sasaki/dot.hpp"

#include <algorithm>
#include <fstream>

namespace sasaki {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_label(const FiniteOml& L, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ", ";
    first = false;
    out += L.label(e);
  });
  return out + "}";
}

}  // namespace

std::string oml_to_dot(const FiniteOml& L, const std::string& name) {
  std::string out = "digraph " + quote(name) + " {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  const auto atoms = L.atoms();
  for (Element x = 0; x < L.size(); ++x) {
    out += "  n" + std::to_string(x) + " [label=" + quote(L.label(x)) + "";
    if (std::find(atoms.begin(), atoms.end(), x) != atoms.end()) out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  for (const auto& [x, y] : L.covers()) out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
  return out + "}\n";
}

std::string sf_to_dot(const SfLattice& sfl, const std::string& name) {
  const FiniteOml& L = sfl.base();
  const auto& fs = sfl.filters();
  const auto atoms = sf_atoms(sfl);
  std::string out = "digraph " + quote(name) + " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + quote(set_label(L, fs[i].members()));
    if (std::find(atoms.begin(), atoms.end(), fs[i]) != atoms.end()) out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  // i -> j when F_j is a maximal proper subset of F_i among filters.
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (i == j || !sfl.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < fs.size() && cover; ++k) {
        if (k != i && k != j && sfl.leq(i, k) && sfl.leq(k, j)) cover = false;
      }
      if (cover) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  }
  return out + "}\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorCode::Io, "failed writing " + path);
}

}  // namespace sasaki
