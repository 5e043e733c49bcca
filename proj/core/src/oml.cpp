#include "sasaki/oml.hpp"

#include <algorithm>
#include <json.hpp>

namespace sasaki {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::EmptyMeasurement: return "EmptyMeasurement";
    case ErrorCode::ContainsBot: return "ContainsBot";
    case ErrorCode::NotPairwiseOrthogonal: return "NotPairwiseOrthogonal";
    case ErrorCode::JoinNotTop: return "JoinNotTop";
    case ErrorCode::NotFiner: return "NotFiner";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::PastingNotOrthomodular: return "PastingNotOrthomodular";
    case ErrorCode::InvalidDescription: return "InvalidDescription";
    case ErrorCode::ImproperFilter: return "ImproperFilter";
    case ErrorCode::NotAFilter: return "NotAFilter";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::DimTooSmall: return "DimTooSmall";
    case ErrorCode::PrecondViolated: return "PrecondViolated";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::string_view to_string(OmlViolationKind kind) {
  switch (kind) {
    case OmlViolationKind::Malformed: return "Malformed";
    case OmlViolationKind::NotAPoset: return "NotAPoset";
    case OmlViolationKind::NotALattice: return "NotALattice";
    case OmlViolationKind::NotAnOrthocomplementation: return "NotAnOrthocomplementation";
    case OmlViolationKind::NotOrthomodular: return "NotOrthomodular";
  }
  return "Unknown";
}

namespace {

OmlViolation violation(OmlViolationKind kind, Element x, Element y, std::string detail) {
  return OmlViolation{kind, x, y, std::move(detail)};
}

}  // namespace

std::variant<FiniteOml, OmlViolation> verify_oml(const OmlTables& t) {
  const std::size_t n = t.n;
  if (n < 2) {
    return violation(OmlViolationKind::Malformed, 0, 0, "need at least two elements (bot != top)");
  }
  if (t.leq.size() != n * n || t.ortho.size() != n) {
    return violation(OmlViolationKind::Malformed, 0, 0, "table sizes do not match n");
  }
  if (!t.labels.empty() && t.labels.size() != n) {
    return violation(OmlViolationKind::Malformed, 0, 0, "labels must be empty or have n entries");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.ortho[i] >= n) {
      return violation(OmlViolationKind::Malformed, static_cast<Element>(i), 0, "ortho index out of range");
    }
  }
  auto rel = [&](std::size_t i, std::size_t j) { return t.leq[i * n + j] != 0; };

  FiniteOml L;
  L.n_ = n;
  L.up_.assign(n, ElementSet(n));
  L.down_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel(i, j)) {
        L.up_[i].insert(static_cast<Element>(j));
        L.down_[j].insert(static_cast<Element>(i));
      }
    }
  }

  // Partial order.
  for (Element i = 0; i < n; ++i) {
    if (!rel(i, i)) return violation(OmlViolationKind::NotAPoset, i, i, "not reflexive");
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (rel(i, j) && rel(j, i)) {
        return violation(OmlViolationKind::NotAPoset, i, j, "not antisymmetric");
      }
    }
  }
  for (Element i = 0; i < n; ++i) {
    // everything above something above i must be above i
    for (Element j : L.up_[i].members()) {
      if (!L.up_[j].is_subset_of(L.up_[i])) {
        const auto missing = (L.up_[j] - L.up_[i]).members().front();
        return violation(OmlViolationKind::NotAPoset, i, missing, "not transitive");
      }
    }
  }

  // Bounds.
  bool have_bot = false;
  bool have_top = false;
  for (Element i = 0; i < n; ++i) {
    if (L.up_[i].size() == n) {
      L.bot_ = i;
      have_bot = true;
    }
    if (L.down_[i].size() == n) {
      L.top_ = i;
      have_top = true;
    }
  }
  if (!have_bot) return violation(OmlViolationKind::NotALattice, 0, 0, "no least element");
  if (!have_top) return violation(OmlViolationKind::NotALattice, 0, 0, "no greatest element");

  // Pairwise meets and joins.
  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const ElementSet upper = L.up_[x] & L.up_[y];
      std::optional<Element> lub;
      upper.for_each([&](Element z) {
        if (!lub && L.up_[z] == upper) lub = z;
      });
      if (!lub) return violation(OmlViolationKind::NotALattice, x, y, "no least upper bound");
      const ElementSet lower = L.down_[x] & L.down_[y];
      std::optional<Element> glb;
      lower.for_each([&](Element z) {
        if (!glb && L.down_[z] == lower) glb = z;
      });
      if (!glb) return violation(OmlViolationKind::NotALattice, x, y, "no greatest lower bound");
      L.join_[x * n + y] = L.join_[y * n + x] = *lub;
      L.meet_[x * n + y] = L.meet_[y * n + x] = *glb;
    }
  }

  // Orthocomplementation.
  L.ortho_ = t.ortho;
  for (Element x = 0; x < n; ++x) {
    const Element xp = L.ortho_[x];
    if (L.ortho_[xp] != x) {
      return violation(OmlViolationKind::NotAnOrthocomplementation, x, xp, "not an involution");
    }
    if (L.meet(x, xp) != L.bot_) {
      return violation(OmlViolationKind::NotAnOrthocomplementation, x, xp, "x ^ x' != bot");
    }
    if (L.join(x, xp) != L.top_) {
      return violation(OmlViolationKind::NotAnOrthocomplementation, x, xp, "x v x' != top");
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (rel(x, y) && !rel(L.ortho_[y], L.ortho_[x])) {
        return violation(OmlViolationKind::NotAnOrthocomplementation, x, y, "not antitone");
      }
    }
  }

  // Orthomodular law: x <= y implies y = x v (y ^ x').
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (rel(x, y) && L.join(x, L.meet(y, L.ortho_[x])) != y) {
        return violation(OmlViolationKind::NotOrthomodular, x, y, "y != x v (y ^ x')");
      }
    }
  }

  L.labels_ = t.labels;
  return L;
}

FiniteOml make_oml(const OmlTables& tables) {
  auto result = verify_oml(tables);
  if (auto* v = std::get_if<OmlViolation>(&result)) {
    throw Error(ErrorCode::Malformed, std::string(to_string(v->kind)) + " at (" +
                                          std::to_string(v->x) + ", " + std::to_string(v->y) +
                                          "): " + v->detail);
  }
  return std::get<FiniteOml>(std::move(result));
}

OmlTables to_tables(const FiniteOml& L) {
  OmlTables t;
  t.n = L.size();
  t.leq.assign(t.n * t.n, 0);
  for (Element x = 0; x < t.n; ++x) {
    L.up_set(x).for_each([&](Element y) { t.leq[x * t.n + y] = 1; });
  }
  t.ortho = L.ortho_table();
  t.labels = L.labels();
  return t;
}

std::vector<Element> FiniteOml::atoms() const {
  std::vector<Element> out;
  for (Element x = 0; x < n_; ++x) {
    if (x != bot_ && down_[x].size() == 2) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<Element, Element>> FiniteOml::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < n_; ++x) {
    for (Element y = 0; y < n_; ++y) {
      if (!less(x, y)) continue;
      // x covered by y iff the interval [x, y] is exactly {x, y}
      if ((up_[x] & down_[y]).size() == 2) out.emplace_back(x, y);
    }
  }
  return out;
}

Element FiniteOml::meet_of(const ElementSet& s) const {
  Element acc = top_;
  s.for_each([&](Element e) { acc = meet(acc, e); });
  return acc;
}

Element FiniteOml::join_of(const ElementSet& s) const {
  Element acc = bot_;
  s.for_each([&](Element e) { acc = join(acc, e); });
  return acc;
}

std::string FiniteOml::label(Element x) const {
  if (!labels_.empty()) return labels_[x];
  return std::to_string(x);
}

std::optional<Element> FiniteOml::find_label(std::string_view label) const {
  for (Element i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void FiniteOml::check_element(Element x) const {
  if (x >= n_) {
    throw Error(ErrorCode::Malformed,
                "element " + std::to_string(x) + " out of range for lattice of size " + std::to_string(n_));
  }
}

bool FiniteOml::operator==(const FiniteOml& other) const {
  return n_ == other.n_ && up_ == other.up_ && ortho_ == other.ortho_ && labels_ == other.labels_;
}

std::vector<std::uint8_t> order_closure(std::size_t n,
                                        const std::vector<std::pair<Element, Element>>& pairs) {
  std::vector<ElementSet> up(n, ElementSet(n));
  for (Element i = 0; i < n; ++i) up[i].insert(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::Malformed, "relation pair out of range");
    up[a].insert(b);
  }
  // Warshall over bitset rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (up[i].contains(k)) up[i] |= up[k];
    }
  }
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Element i = 0; i < n; ++i) {
    up[i].for_each([&](Element j) { leq[i * n + j] = 1; });
  }
  return leq;
}

std::string to_json(const FiniteOml& L, RelationForm form) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n"] = L.size();
  j["relation"] = form == RelationForm::Covering ? "covering" : "full";
  ordered_json pairs = ordered_json::array();
  if (form == RelationForm::Covering) {
    for (auto [a, b] : L.covers()) pairs.push_back({a, b});
  } else {
    for (Element a = 0; a < L.size(); ++a) {
      L.up_set(a).for_each([&](Element b) { pairs.push_back({a, b}); });
    }
  }
  j["leq"] = std::move(pairs);
  j["ortho"] = L.ortho_table();
  ordered_json labels = ordered_json::array();
  for (Element i = 0; i < L.size(); ++i) labels.push_back(L.label(i));
  j["labels"] = std::move(labels);
  return j.dump(2) + "\n";
}

FiniteOml lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    OmlTables t;
    t.n = j.at("n").get<std::size_t>();
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& p : j.at("leq")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::ParseError, "leq entries must be [i, j]");
      pairs.emplace_back(p[0].get<Element>(), p[1].get<Element>());
    }
    const std::string relation = j.value("relation", std::string("covering"));
    if (relation != "covering" && relation != "full") {
      throw Error(ErrorCode::ParseError, "relation must be \"covering\" or \"full\"");
    }
    if (relation == "covering") {
      t.leq = order_closure(t.n, pairs);
    } else {
      t.leq.assign(t.n * t.n, 0);
      for (auto [a, b] : pairs) {
        if (a >= t.n || b >= t.n) throw Error(ErrorCode::Malformed, "relation pair out of range");
        t.leq[a * t.n + b] = 1;
      }
    }
    t.ortho = j.at("ortho").get<std::vector<Element>>();
    if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
    return make_oml(t);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace sasaki
