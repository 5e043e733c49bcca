#include "sasaki/measurements.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sasaki {

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("SASAKI_LATTICE_CAP"); env != nullptr && *env != '\0') {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("SASAKI_LATTICE_CAP is not a number: ") + env);
    }
  }
  return kDefaultEnumerationCap;
}

namespace {

void check_cap(const FiniteOml& L, std::size_t cap) {
  if (L.size() > cap) {
    throw Error(ErrorCode::TooLarge, "lattice has " + std::to_string(L.size()) +
                                         " elements, enumeration cap is " + std::to_string(cap));
  }
}

std::string el(const FiniteOml& L, Element e) { return L.label(e); }

}  // namespace

bool FiniteMeasurement::contains(Element e) const {
  return std::binary_search(outcomes_.begin(), outcomes_.end(), e);
}

std::vector<Element> BooleanSubalgebra::atoms() const {
  const FiniteOml& L = *base_;
  std::vector<Element> out;
  elems_.for_each([&](Element x) {
    if (x == L.bot()) return;
    // minimal: no other non-bot member strictly below
    const ElementSet below = (L.down_set(x) & elems_);
    if (below.size() == 2) out.push_back(x);
  });
  return out;
}

BooleanSubalgebra make_subalgebra(const FiniteOml& L, ElementSet elems) {
  if (elems.universe() != L.size()) throw Error(ErrorCode::BaseMismatch, "element set has the wrong universe");
  if (!elems.contains(L.bot()) || !elems.contains(L.top())) {
    throw Error(ErrorCode::Malformed, "subalgebra must contain bot and top");
  }
  const auto members = elems.members();
  for (Element x : members) {
    if (!elems.contains(L.ortho(x))) throw Error(ErrorCode::Malformed, "not closed under ortho at " + el(L, x));
    for (Element y : members) {
      if (!elems.contains(L.meet(x, y)) || !elems.contains(L.join(x, y))) {
        throw Error(ErrorCode::Malformed, "not closed under meet/join at " + el(L, x) + ", " + el(L, y));
      }
      if (!L.commutes(x, y)) {
        throw Error(ErrorCode::Malformed, "elements do not commute: " + el(L, x) + ", " + el(L, y));
      }
    }
  }
  return BooleanSubalgebra(&L, std::move(elems));
}

FiniteMeasurement validate_measurement(const FiniteOml& L, std::vector<Element> outcomes) {
  if (outcomes.empty()) throw Error(ErrorCode::EmptyMeasurement, "a measurement needs at least one outcome");
  for (Element e : outcomes) L.check_element(e);
  std::sort(outcomes.begin(), outcomes.end());
  outcomes.erase(std::unique(outcomes.begin(), outcomes.end()), outcomes.end());
  for (Element e : outcomes) {
    if (e == L.bot()) throw Error(ErrorCode::ContainsBot, "outcome " + el(L, e) + " is bot");
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
      if (!L.orthogonal(outcomes[i], outcomes[j])) {
        throw Error(ErrorCode::NotPairwiseOrthogonal,
                    el(L, outcomes[i]) + " is not below " + el(L, outcomes[j]) + "'");
      }
    }
  }
  Element acc = L.bot();
  for (Element e : outcomes) acc = L.join(acc, e);
  if (acc != L.top()) throw Error(ErrorCode::JoinNotTop, "outcomes join to " + el(L, acc));
  return FiniteMeasurement(&L, std::move(outcomes));
}

bool finer_than(const FiniteMeasurement& m, const FiniteMeasurement& coarser) {
  if (&m.base() != &coarser.base()) throw Error(ErrorCode::BaseMismatch, "measurements over different lattices");
  const FiniteOml& L = m.base();
  return std::all_of(m.outcomes().begin(), m.outcomes().end(), [&](Element e) {
    return std::any_of(coarser.outcomes().begin(), coarser.outcomes().end(),
                       [&](Element f) { return L.leq(e, f); });
  });
}

std::map<Element, Element> refinement_map(const FiniteMeasurement& m, const FiniteMeasurement& coarser) {
  if (!finer_than(m, coarser)) throw Error(ErrorCode::NotFiner, "first measurement is not finer than the second");
  const FiniteOml& L = m.base();
  std::map<Element, Element> out;
  for (Element e : m.outcomes()) {
    for (Element f : coarser.outcomes()) {
      if (!L.leq(e, f)) continue;
      auto [it, fresh] = out.emplace(e, f);
      if (!fresh) {
        // impossible for valid measurements: e <= f1 <= f2' and e <= f2 force e = bot
        throw Error(ErrorCode::NotFiner, "outcome " + el(L, e) + " lies below two outcomes");
      }
    }
  }
  return out;
}

BooleanSubalgebra measurement_to_fba(const FiniteMeasurement& m) {
  const FiniteOml& L = m.base();
  const auto& outs = m.outcomes();
  if (outs.size() > 24) throw Error(ErrorCode::TooLarge, "measurement has too many outcomes to expand");
  ElementSet elems(L.size());
  const std::size_t subsets = std::size_t{1} << outs.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Element acc = L.bot();
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if ((mask >> i) & 1U) acc = L.join(acc, outs[i]);
    }
    elems.insert(acc);
  }
  return BooleanSubalgebra(&L, std::move(elems));
}

FiniteMeasurement fba_to_measurement(const BooleanSubalgebra& b) {
  return validate_measurement(b.base(), b.atoms());
}

Element pi_b(const BooleanSubalgebra& b, Element x) {
  const FiniteOml& L = b.base();
  L.check_element(x);
  return L.meet_of(b.elements() & L.up_set(x));
}

BooleanSubalgebra sem(const FiniteOml& L, Element x) {
  L.check_element(x);
  return BooleanSubalgebra(&L, ElementSet(L.size(), {L.bot(), x, L.ortho(x), L.top()}));
}

BooleanSubalgebra sem2(const FiniteOml& L, Element x, Element y) {
  L.check_element(x);
  L.check_element(y);
  if (!L.leq(x, y)) throw Error(ErrorCode::NotComparable, L.label(x) + " is not below " + L.label(y));
  const Element xp = L.ortho(x);
  const Element yp = L.ortho(y);
  return BooleanSubalgebra(
      &L, ElementSet(L.size(), {L.top(), y, L.join(x, yp), xp, x, L.meet(y, xp), yp, L.bot()}));
}

std::vector<FiniteMeasurement> enumerate_measurements(const FiniteOml& L, std::size_t cap) {
  check_cap(L, cap);
  std::vector<std::vector<Element>> found;
  std::vector<Element> chosen;
  // Outcomes are added in increasing index order; once the join reaches top
  // no further non-bot orthogonal element exists.
  auto recurse = [&](auto&& self, Element next, Element acc) -> void {
    if (acc == L.top() && !chosen.empty()) {
      found.push_back(chosen);
      return;
    }
    for (Element e = next; e < L.size(); ++e) {
      if (e == L.bot()) continue;
      if (!std::all_of(chosen.begin(), chosen.end(), [&](Element c) { return L.orthogonal(e, c); })) continue;
      chosen.push_back(e);
      self(self, e + 1, L.join(acc, e));
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, L.bot());
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<FiniteMeasurement> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(validate_measurement(L, std::move(f)));
  return out;
}

std::vector<BooleanSubalgebra> enumerate_fbas(const FiniteOml& L, std::size_t cap) {
  std::vector<BooleanSubalgebra> out;
  for (const auto& m : enumerate_measurements(L, cap)) out.push_back(measurement_to_fba(m));
  std::sort(out.begin(), out.end(), [](const BooleanSubalgebra& a, const BooleanSubalgebra& b) {
    return canonical_less(a.elements(), b.elements());
  });
  return out;
}

}  // namespace sasaki
