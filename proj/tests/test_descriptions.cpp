#include <doctest.h>

#include "helpers.hpp"
#include "sasaki/constructors.hpp"
#include "sasaki/descriptions.hpp"

using namespace sasaki;
using testing::el;
using testing::error_code_of;

namespace {

// E1 recomputed from the subalgebras themselves rather than the space tables.
bool e1_oracle(const DescriptionSpace& sp, const std::vector<Element>& d) {
  const auto& bs = sp.fbas();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (!bs[i].contains(d[i]) || d[i] == sp.base().bot()) return false;
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (bs[i].elements().is_subset_of(bs[j].elements()) && d[i] != pi_b(bs[i], d[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("the constant-top description") {
  const FiniteOml L = mo(2);
  const DescriptionSpace sp(L);
  CHECK(sp.size() == 3);
  const PartialDescription d(sp, std::vector<Element>(sp.size(), L.top()));
  CHECK(validate_e1(d).ok());
  CHECK(validate_e2(d).ok());
  CHECK(sem_lemma_holds(d));
  CHECK(description_to_filter(d).members().size() == 1);
}

TEST_CASE("the description of a principal filter") {
  const FiniteOml L = boolean_algebra(3);
  const DescriptionSpace sp(L);
  const Element a = el(L, "a");
  const auto d = filter_to_description(sp, principal_filter(L, a));
  CHECK(validate_e1(d).ok());
  for (std::size_t b = 0; b < sp.size(); ++b) CHECK(d(b) == pi_b(sp.fbas()[b], a));
  CHECK(description_to_filter(d).members() == L.up_set(a));

  // Measurement view: atoms of B below d(B).
  const std::size_t whole = *sp.find(L.all());
  CHECK(d.outcomes(whole) == std::vector<Element>{a});
  const std::size_t trivial = *sp.find(ElementSet(L.size(), {L.bot(), L.top()}));
  CHECK(d.outcomes(trivial) == std::vector<Element>{L.top()});
}

TEST_CASE("a mutated description fails E1 and E2 at the same pair kind") {
  const FiniteOml L = boolean_algebra(3);
  const DescriptionSpace sp(L);
  auto values = filter_to_description(sp, principal_filter(L, el(L, "a"))).values();
  const std::size_t whole = *sp.find(L.all());
  values[whole] = el(L, "b");
  const PartialDescription d(sp, values);
  const auto r1 = validate_e1(d);
  CHECK(r1.defect == DescriptionDefect::ConditionFails);
  CHECK_FALSE(validate_e2(d).ok());
  CHECK_FALSE(e1_oracle(sp, values));
  CHECK(error_code_of([&] { description_to_filter(d); }) == ErrorCode::InvalidDescription);
}

TEST_CASE("malformed tables") {
  const FiniteOml L = mo(2);
  const DescriptionSpace sp(L);
  CHECK(error_code_of([&] { PartialDescription(sp, {L.top()}); }) == ErrorCode::InvalidDescription);
  std::vector<Element> v(sp.size(), L.top());
  v[0] = L.bot();
  CHECK(validate_e1(PartialDescription(sp, v)).defect == DescriptionDefect::ValueIsBot);
  v[0] = el(L, "a");
  const std::size_t trivial = *sp.find(ElementSet(L.size(), {L.bot(), L.top()}));
  std::vector<Element> w(sp.size(), L.top());
  w[trivial] = el(L, "a");
  CHECK(validate_e1(PartialDescription(sp, w)).defect == DescriptionDefect::ValueNotInSubalgebra);
  CHECK(error_code_of([&] { filter_to_description(sp, principal_filter(L, L.bot())); }) ==
        ErrorCode::ImproperFilter);
}

TEST_CASE("E1 and E2 agree on every candidate table") {
  const FiniteOml lm2 = mo(2);
  const DescriptionSpace m2(lm2);
  const auto r = check_e1_iff_e2(m2);
  CHECK(r.tables == 9);
  CHECK(candidate_table_count(m2) == 9);
  CHECK(r.e1_pass == 9);
  CHECK(r.holds());
  CHECK_FALSE(r.sampled);

  const FiniteOml lb2 = boolean_algebra(2);
  const DescriptionSpace b2(lb2);
  CHECK(check_e1_iff_e2(b2).tables == 3);

  const FiniteOml b3 = boolean_algebra(3);
  const DescriptionSpace s3(b3);
  const auto r3 = check_e1_iff_e2(s3);
  CHECK(r3.holds());
  CHECK(r3.e1_pass == enumerate_descriptions(s3).size());
}

TEST_CASE("sampling above the table cap is seeded") {
  const FiniteOml L = mo(3);
  const DescriptionSpace sp(L);
  const auto a = check_e1_iff_e2(sp, 10, 11);
  const auto b = check_e1_iff_e2(sp, 10, 11);
  CHECK(a.sampled);
  CHECK(a.tables == 10);
  CHECK(a.e1_pass == b.e1_pass);
  CHECK(a.holds());
}

TEST_CASE("enumerated descriptions match the E1 oracle and the proper filters") {
  for (const auto& L : {mo(2), mo(3), boolean_algebra(3)}) {
    const DescriptionSpace sp(L);
    const auto ds = enumerate_descriptions(sp);
    for (const auto& d : ds) CHECK(e1_oracle(sp, d.values()));
    const SfLattice sfl = enumerate_filters(L);
    CHECK(ds.size() == sfl.size() - 1);
    const auto rt = roundtrip_check(sp, sfl);
    CHECK(rt.holds());
    CHECK(rt.filters_checked == sfl.size() - 1);
    CHECK(rt.descriptions_checked == ds.size());
  }
}

TEST_CASE("larger filters give smaller description values") {
  const FiniteOml L = mo(3);
  const DescriptionSpace sp(L);
  const SfLattice sfl = enumerate_filters(L);
  for (const auto& f1 : sfl.filters()) {
    if (!f1.proper()) continue;
    for (const auto& f2 : sfl.filters()) {
      if (!f2.proper() || !f1.members().is_subset_of(f2.members())) continue;
      const auto d1 = filter_to_description(sp, f1);
      const auto d2 = filter_to_description(sp, f2);
      for (std::size_t b = 0; b < sp.size(); ++b) CHECK(L.leq(d2(b), d1(b)));
    }
  }
}
