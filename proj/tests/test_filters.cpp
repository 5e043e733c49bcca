#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sasaki/constructors.hpp"
#include "sasaki/sasaki_filters.hpp"

using namespace sasaki;
using testing::el;
using testing::set_of;

namespace {

std::vector<FiniteOml> substrates() {
  return {boolean_algebra(2), boolean_algebra(3), mo(2), mo(3), from_greechie(parse_greechie("a b c\nc d e\n"))};
}

std::set<oracle::Subset> as_subsets(const SfLattice& sfl) {
  std::set<oracle::Subset> out;
  for (const auto& f : sfl.filters()) out.insert(f.members().members());
  return out;
}

}  // namespace

TEST_CASE("filter enumeration agrees with the subset-scanning oracle") {
  for (const auto& L : substrates()) {
    const SfLattice sfl = enumerate_filters(L);
    CHECK(as_subsets(sfl) == oracle::sasaki_filters(to_tables(L)));
    CHECK(as_subsets(enumerate_filters(L, enumeration_cap(), 4)) == as_subsets(sfl));
    CHECK(enumerate_filters(L, enumeration_cap(), 4).filters() == sfl.filters());
  }
}

TEST_CASE("SF(MO(2)) has ten filters and four partial states") {
  const FiniteOml L = mo(2);
  const SfLattice sfl = enumerate_filters(L);
  CHECK(sfl.size() == 10);
  const auto atoms = sf_atoms(sfl);
  REQUIRE(atoms.size() == 4);
  for (const auto& f : atoms) {
    CHECK(f.size() == 3);
    CHECK(f.proper());
  }
  CHECK(sfl.filters()[sfl.greatest()].members() == set_of(L, {"1"}));
  CHECK(sfl.filters()[sfl.least()].members() == L.all());
  CHECK(sfl.leq(sfl.least(), sfl.greatest()));
  CHECK_FALSE(sfl.leq(sfl.greatest(), sfl.least()));
}

TEST_CASE("partial states are the maximal proper filters") {
  for (const auto& L : substrates()) {
    const auto oracle_filters = oracle::sasaki_filters(to_tables(L));
    std::set<oracle::Subset> maximal;
    for (const auto& f : oracle_filters) {
      if (oracle::in(f, L.bot())) continue;
      bool is_max = true;
      for (const auto& g : oracle_filters) {
        if (g != f && !oracle::in(g, L.bot()) && std::includes(g.begin(), g.end(), f.begin(), f.end())) is_max = false;
      }
      if (is_max) maximal.insert(f);
    }
    std::set<oracle::Subset> got;
    for (const auto& f : sf_atoms(enumerate_filters(L))) got.insert(f.members().members());
    CHECK(got == maximal);
  }
}

TEST_CASE("is_sasaki_filter names the defect") {
  const FiniteOml L = mo(2);
  CHECK(is_sasaki_filter(L, ElementSet(L.size())).defect == FilterDefect::Empty);
  const auto up = is_sasaki_filter(L, set_of(L, {"a"}));
  CHECK(up.defect == FilterDefect::NotUpwardClosed);
  CHECK(up.x == el(L, "a"));
  CHECK(up.y == L.top());
  const auto st = is_sasaki_filter(L, set_of(L, {"a", "a'", "1"}));
  CHECK(st.defect == FilterDefect::NotSasakiStable);
  CHECK(is_sasaki_filter(L, set_of(L, {"a", "b", "1"})).ok());
  CHECK(testing::error_code_of([&] { make_filter(L, set_of(L, {"a"})); }) == ErrorCode::NotAFilter);
}

TEST_CASE("principal filters are up-sets") {
  for (const auto& L : substrates()) {
    for (Element x = 0; x < L.size(); ++x) {
      const auto f = principal_filter(L, x);
      CHECK(f.members() == L.up_set(x));
      CHECK(f.proper() == (x != L.bot()));
    }
  }
}

TEST_CASE("generate_filter is a closure operator") {
  for (const auto& L : substrates()) {
    const std::size_t n = L.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::min<std::size_t>(n, 10)); mask += 7) {
      const ElementSet s(n, oracle::members_of(mask, n));
      const auto g = generate_filter(L, s);
      CHECK(s.is_subset_of(g.members()));
      CHECK(is_sasaki_filter(L, g.members()).ok());
      CHECK(generate_filter(L, g.members()).members() == g.members());
      // Least: inside every oracle filter containing s.
      for (const auto& f : oracle::sasaki_filters(to_tables(L))) {
        const ElementSet fs(n, f);
        if (s.is_subset_of(fs)) CHECK(g.members().is_subset_of(fs));
      }
    }
    CHECK(generate_filter(L, ElementSet(n)).members() == set_of(L, {L.label(L.top())}));
  }
}

TEST_CASE("sf_join and sf_meet are the lattice operations of SF") {
  for (const auto& L : {mo(2), mo(3), boolean_algebra(3)}) {
    const SfLattice sfl = enumerate_filters(L);
    const auto& fs = sfl.filters();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        const auto jn = sf_join(L, {fs[i], fs[j]});
        CHECK(jn.members() == (fs[i].members() & fs[j].members()));
        // Meet under reverse inclusion: least filter (by inclusion) above both.
        const auto mt = sf_meet(L, {fs[i], fs[j]});
        const ElementSet u = fs[i].members() | fs[j].members();
        for (const auto& g : fs) {
          if (u.is_subset_of(g.members())) CHECK(mt.members().is_subset_of(g.members()));
        }
        CHECK(u.is_subset_of(mt.members()));
        CHECK(sfl.index_of(mt.members()).has_value());
      }
    }
    CHECK(sf_join(L, {}).members() == L.all());
    CHECK(sf_meet(L, {}).members().size() == 1);
  }
}

TEST_CASE("principal trace characterises Sasaki filters") {
  for (const auto& L : {mo(2), boolean_algebra(2), boolean_algebra(3)}) {
    const auto fbas = enumerate_fbas(L);
    const auto oracle_filters = oracle::sasaki_filters(to_tables(L));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << L.size()); ++mask) {
      const auto members = oracle::members_of(mask, L.size());
      const ElementSet s(L.size(), members);
      const auto r = check_principal_trace(L, s, fbas);
      CHECK(r.consistent());
      CHECK(r.is_filter == (oracle_filters.count(members) == 1));
    }
  }
}

TEST_CASE("the up-set embedding") {
  const auto m3 = embed_up_properties(mo(3));
  CHECK(m3.injective);
  CHECK(m3.order_preserving);
  CHECK(m3.join_preserving);
  CHECK_FALSE(m3.meet_preserving);
  REQUIRE(m3.meet_counterexample.has_value());
  const FiniteOml L = mo(3);
  CHECK(*m3.meet_counterexample == std::pair<Element, Element>{el(L, "a"), el(L, "b")});

  const auto b3 = embed_up_properties(boolean_algebra(3));
  CHECK(b3.injective);
  CHECK(b3.meet_preserving);
  CHECK(b3.pairs_checked == 64);
}

TEST_CASE("enumeration cap") {
  CHECK(testing::error_code_of([] { enumerate_filters(mo(3), 4); }) == ErrorCode::TooLarge);
}
