#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sasaki/constructors.hpp"

using namespace sasaki;
using testing::error_code_of;

namespace {

// Searches every bijection for an order and ortho isomorphism.
bool isomorphic(const FiniteOml& a, const FiniteOml& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < a.size() && ok; ++x) {
      if (p[a.ortho(x)] != b.ortho(p[x])) ok = false;
      for (Element y = 0; y < a.size() && ok; ++y) {
        if (a.leq(x, y) != b.leq(p[x], p[y])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("boolean algebras") {
  for (std::size_t k = 1; k <= 6; ++k) {
    const FiniteOml L = boolean_algebra(k);
    CHECK(L.size() == (std::size_t{1} << k));
    CHECK(L.atoms().size() == k);
    for (Element x = 0; x < L.size(); ++x) {
      for (Element y = 0; y < L.size(); ++y) CHECK(L.commutes(x, y));
    }
  }
  const FiniteOml b3 = boolean_algebra(3);
  CHECK(b3.labels() == std::vector<std::string>{"0", "a", "b", "c", "a|b", "a|c", "b|c", "1"});
  CHECK(error_code_of([] { boolean_algebra(0); }) == ErrorCode::Malformed);
  CHECK(error_code_of([] { boolean_algebra(11); }) == ErrorCode::TooLarge);
  CHECK(boolean_algebra(10).size() == 1024);
}

TEST_CASE("MO(k)") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const FiniteOml L = mo(k);
    CHECK(L.size() == 2 * k + 2);
    CHECK(L.atoms().size() == 2 * k);
    CHECK(L.covers().size() == 4 * k);
    for (Element x = 0; x < L.size(); ++x) {
      if (x == L.bot() || x == L.top()) continue;
      CHECK((L.less(L.bot(), x) && L.atoms().end() != std::find(L.atoms().begin(), L.atoms().end(), x)));
    }
    CHECK(oracle::is_oml(to_tables(L)));
  }
  const FiniteOml m2 = mo(2);
  CHECK(m2.labels() == std::vector<std::string>{"0", "a", "a'", "b", "b'", "1"});
  CHECK(m2.ortho_table() == std::vector<Element>{5, 2, 1, 4, 3, 0});
  CHECK(error_code_of([] { mo(0); }) == ErrorCode::Malformed);
}

TEST_CASE("a single Greechie block is the boolean algebra on its atoms") {
  const FiniteOml L = from_greechie(parse_greechie("x y z\n"));
  CHECK(L.size() == 8);
  CHECK(isomorphic(L, boolean_algebra(3)));
  CHECK_FALSE(isomorphic(L, mo(3)));
}

TEST_CASE("two blocks sharing one atom form the 12-element pasting") {
  const FiniteOml L = from_greechie(parse_greechie("a b c\nc d e\n"));
  CHECK(L.size() == 12);
  CHECK(L.atoms().size() == 5);
  CHECK(oracle::is_oml(to_tables(L)));
  const Element a = testing::el(L, "a");
  const Element d = testing::el(L, "d");
  CHECK_FALSE(L.commutes(a, d));
  CHECK(L.join(a, d) == L.ortho(testing::el(L, "c")));
  CHECK(L.commutes(a, testing::el(L, "c")));
}

TEST_CASE("a loop of three blocks is not orthomodular") {
  const std::string loop = "a b c\nc d e\ne f a\n";
  try {
    from_greechie(parse_greechie(loop));
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PastingNotOrthomodular);
    CHECK(std::string(e.what()).find("NotALattice") != std::string::npos);
  }
}

TEST_CASE("invalid Greechie diagrams") {
  CHECK(error_code_of([] { from_greechie(parse_greechie("")); }) == ErrorCode::InvalidDiagram);
  CHECK(error_code_of([] { from_greechie(parse_greechie("a\n")); }) == ErrorCode::InvalidDiagram);
  CHECK(error_code_of([] { from_greechie(parse_greechie("a b a\n")); }) == ErrorCode::InvalidDiagram);
  CHECK(error_code_of([] { from_greechie(parse_greechie("a b c\na b d\n")); }) == ErrorCode::InvalidDiagram);
  CHECK(error_code_of([] {
          from_greechie(parse_greechie("a b c d e f g h i j k l m n o p q\n"));
        }) == ErrorCode::TooLarge);
}

TEST_CASE("Greechie parsing skips comments and blank lines") {
  const GreechieDiagram g = parse_greechie("# bowtie\n\na b c   # first\n  c d e\n");
  REQUIRE(g.blocks.size() == 2);
  CHECK(g.blocks[0] == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.blocks[1] == std::vector<std::string>{"c", "d", "e"});
}

TEST_CASE("hexagon tables fail orthomodularity only") {
  const OmlTables t = hexagon_tables();
  CHECK(t.labels == std::vector<std::string>{"0", "a", "b", "b'", "a'", "1"});
  const auto v = verify_oml(t);
  REQUIRE(std::holds_alternative<OmlViolation>(v));
  CHECK(std::get<OmlViolation>(v).kind == OmlViolationKind::NotOrthomodular);
}
