#include "sasaki/descriptions.hpp"

#include <limits>
#include <random>

namespace sasaki {

DescriptionSpace::DescriptionSpace(const FiniteOml& L, std::size_t cap)
    : base_(&L), fbas_(enumerate_fbas(L, cap)) {
  const std::size_t m = fbas_.size();
  const std::size_t n = L.size();
  included_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) included_[i * m + j] = fbas_[i].is_subalgebra_of(fbas_[j]);
  }
  projection_.resize(m * n);
  for (std::size_t b = 0; b < m; ++b) {
    for (Element x = 0; x < n; ++x) projection_[b * n + x] = pi_b(fbas_[b], x);
  }
  for (std::size_t b = 0; b < m; ++b) lookup_.emplace(fbas_[b].elements(), b);
}

std::optional<std::size_t> DescriptionSpace::find(const ElementSet& members) const {
  if (auto it = lookup_.find(members); it != lookup_.end()) return it->second;
  return std::nullopt;
}

std::size_t DescriptionSpace::index_of_sem(Element x) const {
  const auto idx = find(sem(*base_, x).elements());
  if (!idx) throw Error(ErrorCode::Malformed, "subalgebra generated by " + base_->label(x) + " not enumerated");
  return *idx;
}

PartialDescription::PartialDescription(const DescriptionSpace& space, std::vector<Element> values)
    : space_(&space), values_(std::move(values)) {
  if (values_.size() != space.size()) {
    throw Error(ErrorCode::InvalidDescription, "description table must have one value per subalgebra");
  }
  for (Element v : values_) space.base().check_element(v);
}

std::vector<Element> PartialDescription::outcomes(std::size_t fba) const {
  const auto& b = space_->fbas().at(fba);
  const FiniteOml& L = space_->base();
  std::vector<Element> out;
  for (Element o : b.atoms()) {
    if (L.leq(o, values_[fba])) out.push_back(o);
  }
  return out;
}

namespace {

ConditionReport check_values(const PartialDescription& d) {
  const auto& space = d.space();
  for (std::size_t b = 0; b < space.size(); ++b) {
    if (!space.fbas()[b].contains(d(b))) return {DescriptionDefect::ValueNotInSubalgebra, b, b, d(b), d(b)};
    if (d(b) == space.base().bot()) return {DescriptionDefect::ValueIsBot, b, b, d(b), d(b)};
  }
  return {};
}

template <typename Condition>
ConditionReport check_pairs(const PartialDescription& d, Condition holds) {
  if (auto r = check_values(d); !r.ok()) return r;
  const auto& space = d.space();
  for (std::size_t b1 = 0; b1 < space.size(); ++b1) {
    for (std::size_t b2 = 0; b2 < space.size(); ++b2) {
      const Element projected = space.project(b1, d(b2));
      if (!holds(b1, b2, d(b1), projected)) {
        return {DescriptionDefect::ConditionFails, b1, b2, d(b1), projected};
      }
    }
  }
  return {};
}

bool e1_fast(const DescriptionSpace& space, const std::vector<Element>& v) {
  const std::size_t m = space.size();
  for (std::size_t b1 = 0; b1 < m; ++b1) {
    for (std::size_t b2 = 0; b2 < m; ++b2) {
      if (space.included(b1, b2) && v[b1] != space.project(b1, v[b2])) return false;
    }
  }
  return true;
}

bool e2_fast(const DescriptionSpace& space, const std::vector<Element>& v) {
  const std::size_t m = space.size();
  const FiniteOml& L = space.base();
  for (std::size_t b1 = 0; b1 < m; ++b1) {
    for (std::size_t b2 = 0; b2 < m; ++b2) {
      if (!L.leq(v[b1], space.project(b1, v[b2]))) return false;
    }
  }
  return true;
}

bool lemma_fast(const DescriptionSpace& space, const std::vector<Element>& v) {
  for (std::size_t b = 0; b < space.size(); ++b) {
    if (v[space.index_of_sem(v[b])] != v[b]) return false;
  }
  return true;
}

std::vector<std::vector<Element>> choices_per_fba(const DescriptionSpace& space) {
  std::vector<std::vector<Element>> choices;
  for (const auto& b : space.fbas()) {
    auto c = b.elements().members();
    std::erase(c, space.base().bot());
    choices.push_back(std::move(c));
  }
  return choices;
}

// Visits every table in lexicographic order of choice positions.
template <typename Fn>
void for_each_table(const std::vector<std::vector<Element>>& choices, Fn&& fn) {
  const std::size_t m = choices.size();
  std::vector<std::size_t> pos(m, 0);
  std::vector<Element> values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = choices[i][0];
  while (true) {
    fn(values);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) {
        values[i] = choices[i][pos[i]];
        break;
      }
      pos[i] = 0;
      values[i] = choices[i][0];
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

}  // namespace

ConditionReport validate_e1(const PartialDescription& d) {
  const auto& space = d.space();
  return check_pairs(d, [&](std::size_t b1, std::size_t b2, Element d1, Element projected) {
    return !space.included(b1, b2) || d1 == projected;
  });
}

ConditionReport validate_e2(const PartialDescription& d) {
  const FiniteOml& L = d.space().base();
  return check_pairs(d, [&](std::size_t, std::size_t, Element d1, Element projected) {
    return L.leq(d1, projected);
  });
}

bool sem_lemma_holds(const PartialDescription& d) {
  if (!check_values(d).ok()) return false;
  return lemma_fast(d.space(), d.values());
}

std::uint64_t candidate_table_count(const DescriptionSpace& space) {
  std::uint64_t total = 1;
  for (const auto& b : space.fbas()) {
    const std::uint64_t k = b.size() - 1;
    if (total > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
    total *= k;
  }
  return total;
}

EquivalenceReport check_e1_iff_e2(const DescriptionSpace& space, std::uint64_t table_cap, std::uint64_t seed) {
  EquivalenceReport r;
  const auto choices = choices_per_fba(space);
  auto visit = [&](const std::vector<Element>& v) {
    ++r.tables;
    const bool e1 = e1_fast(space, v);
    const bool e2 = e2_fast(space, v);
    r.e1_pass += e1;
    r.e2_pass += e2;
    if (e1 != e2) {
      ++r.mismatches;
      if (!r.first_mismatch) r.first_mismatch = v;
    }
    if (e2 && !lemma_fast(space, v)) ++r.lemma_failures;
  };
  if (candidate_table_count(space) <= table_cap) {
    for_each_table(choices, visit);
    return r;
  }
  r.sampled = true;
  std::mt19937_64 rng(seed);
  std::vector<Element> v(choices.size());
  for (std::uint64_t t = 0; t < table_cap; ++t) {
    for (std::size_t i = 0; i < choices.size(); ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, choices[i].size() - 1);
      v[i] = choices[i][pick(rng)];
    }
    visit(v);
  }
  return r;
}

std::vector<PartialDescription> enumerate_descriptions(const DescriptionSpace& space, std::uint64_t table_cap) {
  if (candidate_table_count(space) > table_cap) {
    throw Error(ErrorCode::TooLarge, "too many candidate description tables");
  }
  std::vector<PartialDescription> out;
  for_each_table(choices_per_fba(space), [&](const std::vector<Element>& v) {
    if (e1_fast(space, v)) out.emplace_back(space, v);
  });
  return out;
}

SasakiFilter description_to_filter(const PartialDescription& d) {
  if (const auto r = validate_e1(d); !r.ok()) {
    throw Error(ErrorCode::InvalidDescription, "description fails validation at subalgebras " +
                                                   std::to_string(r.b1) + ", " + std::to_string(r.b2));
  }
  const FiniteOml& L = d.space().base();
  ElementSet image(L.size());
  for (Element v : d.values()) image.insert(v);
  const FilterCheck check = is_sasaki_filter(L, image);
  if (!check.ok() || image.contains(L.bot())) {
    throw Error(ErrorCode::InvalidDescription, "image " + image.to_string() + " is not a proper Sasaki filter");
  }
  return make_filter(L, std::move(image));
}

PartialDescription filter_to_description(const DescriptionSpace& space, const SasakiFilter& f) {
  if (&f.base() != &space.base()) throw Error(ErrorCode::BaseMismatch, "filter over a different lattice");
  if (!f.proper()) throw Error(ErrorCode::ImproperFilter, "filter contains bot");
  std::vector<Element> values;
  values.reserve(space.size());
  for (const auto& b : space.fbas()) {
    const auto least = principal_trace(space.base(), f.members(), b);
    if (!least) throw Error(ErrorCode::NotAFilter, "trace on a subalgebra is not principal");
    values.push_back(*least);
  }
  return PartialDescription(space, std::move(values));
}

RoundTripReport roundtrip_check(const DescriptionSpace& space, const SfLattice& sfl) {
  RoundTripReport r;
  for (const auto& f : sfl.filters()) {
    if (!f.proper()) continue;
    ++r.filters_checked;
    const auto d = filter_to_description(space, f);
    if (description_to_filter(d) != f) ++r.filter_failures;
  }
  for (const auto& d : enumerate_descriptions(space)) {
    ++r.descriptions_checked;
    if (filter_to_description(space, description_to_filter(d)) != d) ++r.description_failures;
  }
  return r;
}

}  // namespace sasaki
