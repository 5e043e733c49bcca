#include "sasaki/reproduce.hpp"

#include <chrono>
#include <functional>
#include <json.hpp>
#include <map>
#include <random>
#include <set>

#include "sasaki/constructors.hpp"
#include "sasaki/descriptions.hpp"
#include "sasaki/ks_search.hpp"
#include "sasaki/measurements.hpp"
#include "sasaki/nonprincipal.hpp"
#include "sasaki/sasaki_filters.hpp"
#include "sasaki/subspace.hpp"

namespace sasaki {

namespace {

using json = nlohmann::ordered_json;

class Facts {
 public:
  explicit Facts(CheckResult& r) : r_(r) {}
  void add(const std::string& key, const json& value) { r_.facts.emplace_back(key, value.dump()); }

 private:
  CheckResult& r_;
};

std::string set_label(const FiniteOml& L, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    out += (first ? "" : ", ") + L.label(e);
    first = false;
  });
  return out + "}";
}

struct NamedLattice {
  std::string name;
  FiniteOml lattice;
};

std::vector<NamedLattice> small_lattices() {
  return {{"MO(2)", mo(2)}, {"MO(3)", mo(3)}, {"2^3", boolean_algebra(3)}};
}

FiniteOml bowtie() { return from_greechie(parse_greechie("a b c\nc d e\n")); }

Vector random_vector(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  Vector v(d);
  for (auto& s : v) s = Scalar(mpq_class(num(rng), den(rng)));
  return v;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t d, std::size_t rank) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < rank; ++i) vs.push_back(random_vector(rng, d));
  return Subspace::span(d, vs);
}

// --- criteria -------------------------------------------------------------

void check_oml_axioms(CheckResult& r, const RunConfig&) {
  Facts f(r);
  bool ok = true;
  json accepted = json::array();
  auto accept = [&](const std::string& name, const FiniteOml& L) {
    const bool valid = std::holds_alternative<FiniteOml>(verify_oml(to_tables(L)));
    ok = ok && valid;
    accepted.push_back({{"lattice", name}, {"elements", L.size()}, {"valid", valid}});
  };
  for (std::size_t k = 1; k <= 4; ++k) accept("2^" + std::to_string(k), boolean_algebra(k));
  for (std::size_t k = 1; k <= 4; ++k) accept("MO(" + std::to_string(k) + ")", mo(k));
  accept("bowtie", bowtie());
  f.add("accepted", accepted);

  const OmlTables hex = hexagon_tables();
  const auto res = verify_oml(hex);
  const auto* v = std::get_if<OmlViolation>(&res);
  const bool rejected = v != nullptr && v->kind == OmlViolationKind::NotOrthomodular;
  ok = ok && rejected;
  if (v != nullptr) {
    f.add("O6", {{"kind", std::string(to_string(v->kind))},
                 {"witness", {hex.labels[v->x], hex.labels[v->y]}},
                 {"detail", v->detail}});
  } else {
    f.add("O6", "accepted");
  }
  r.pass = ok;
}

void check_refinement(CheckResult& r, const RunConfig&) {
  Facts f(r);
  bool ok = true;
  for (const auto& [name, L] : {NamedLattice{"MO(3)", mo(3)}, NamedLattice{"2^3", boolean_algebra(3)}}) {
    const auto ms = enumerate_measurements(L);
    std::size_t pairs = 0;
    std::size_t finer = 0;
    for (const auto& m : ms) {
      for (const auto& m2 : ms) {
        ++pairs;
        if (!finer_than(m, m2)) continue;
        ++finer;
        try {
          const auto map = refinement_map(m, m2);
          if (map.size() != m.outcomes().size()) ok = false;
        } catch (const Error&) {
          ok = false;
        }
      }
    }
    f.add(name, {{"measurements", ms.size()}, {"pairs", pairs}, {"finer_pairs", finer}});
  }
  r.pass = ok;
}

void check_e1_e2(CheckResult& r, const RunConfig& cfg) {
  Facts f(r);
  bool ok = true;
  for (const auto& [name, L] : {NamedLattice{"MO(2)", mo(2)}, NamedLattice{"2^2", boolean_algebra(2)}}) {
    const DescriptionSpace space(L);
    const auto rep = check_e1_iff_e2(space, 1'000'000, cfg.seed);
    ok = ok && rep.holds() && !rep.sampled;
    f.add(name, {{"fbas", space.size()},
                 {"tables", rep.tables},
                 {"e1_pass", rep.e1_pass},
                 {"e2_pass", rep.e2_pass},
                 {"mismatches", rep.mismatches},
                 {"lemma_failures", rep.lemma_failures},
                 {"exhaustive", !rep.sampled}});
  }
  r.pass = ok;
}

void check_roundtrip(CheckResult& r, const RunConfig& cfg) {
  Facts f(r);
  bool ok = true;
  for (const auto& [name, L] : small_lattices()) {
    const DescriptionSpace space(L);
    const SfLattice sfl = enumerate_filters(L, enumeration_cap(), cfg.jobs);
    const auto rep = roundtrip_check(space, sfl);
    ok = ok && rep.holds() && rep.filters_checked > 0 && rep.filters_checked == rep.descriptions_checked;
    f.add(name, {{"proper_filters", rep.filters_checked},
                 {"valid_descriptions", rep.descriptions_checked},
                 {"filter_failures", rep.filter_failures},
                 {"description_failures", rep.description_failures}});
  }
  r.pass = ok;
}

void check_principal_trace_criterion(CheckResult& r, const RunConfig& cfg) {
  Facts f(r);
  bool ok = true;
  std::mt19937_64 rng(cfg.seed);
  for (const auto& [name, L] : small_lattices()) {
    const auto fbas = enumerate_fbas(L);
    const std::size_t n = L.size();
    std::size_t subsets = 0;
    std::size_t filters = 0;
    std::size_t inconsistent = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s(n);
      for (Element e = 0; e < n; ++e) {
        if ((mask >> e) & 1U) s.insert(e);
      }
      const auto rep = check_principal_trace(L, s, fbas);
      ++subsets;
      filters += rep.is_filter;
      if (!rep.consistent()) ++inconsistent;
    }
    ok = ok && inconsistent == 0;

    // Mutants: flip one element of a random filter until 100 non-filters.
    const SfLattice sfl = enumerate_filters(L);
    std::uniform_int_distribution<std::size_t> pick_f(0, sfl.size() - 1);
    std::uniform_int_distribution<Element> pick_e(0, static_cast<Element>(n - 1));
    std::size_t mutants = 0;
    std::size_t witnessed = 0;
    while (mutants < 100) {
      ElementSet s = sfl.filters()[pick_f(rng)].members();
      const Element e = pick_e(rng);
      if (s.contains(e)) {
        s.erase(e);
      } else {
        s.insert(e);
      }
      if (is_sasaki_filter(L, s).ok()) continue;
      ++mutants;
      const auto rep = check_principal_trace(L, s, fbas);
      if (!rep.all_traces_principal && rep.witness_fba) ++witnessed;
    }
    ok = ok && witnessed == mutants;
    f.add(name, {{"subsets", subsets},
                 {"filters", filters},
                 {"inconsistent", inconsistent},
                 {"mutants", mutants},
                 {"mutants_witnessed", witnessed}});
  }
  r.pass = ok;
}

void check_sf_structure(CheckResult& r, const RunConfig& cfg) {
  Facts f(r);
  bool ok = true;
  const FiniteOml m2 = mo(2);
  const FiniteOml b2 = boolean_algebra(2);
  for (const auto* Lp : {&m2, &b2}) {
    const FiniteOml& L = *Lp;
    const SfLattice sfl = enumerate_filters(L, enumeration_cap(), cfg.jobs);
    const auto atoms = sf_atoms(sfl);
    const auto& fs = sfl.filters();
    std::size_t join_mismatch = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        // Least upper bound under reverse inclusion: the largest filter
        // contained in both.
        std::vector<std::size_t> ub;
        for (std::size_t k = 0; k < fs.size(); ++k) {
          if (sfl.leq(i, k) && sfl.leq(j, k)) ub.push_back(k);
        }
        std::optional<std::size_t> lub;
        for (std::size_t k : ub) {
          if (std::all_of(ub.begin(), ub.end(), [&](std::size_t l) { return sfl.leq(k, l); })) lub = k;
        }
        const SasakiFilter joined = sf_join(L, {fs[i], fs[j]});
        if (!lub || fs[*lub] != joined || joined.members() != (fs[i].members() & fs[j].members())) ++join_mismatch;
      }
    }
    std::size_t unsupported = 0;
    for (const auto& g : fs) {
      if (!g.proper()) continue;
      const bool below_atom = std::any_of(atoms.begin(), atoms.end(),
                                          [&](const SasakiFilter& a) { return g.members().is_subset_of(a.members()); });
      unsupported += !below_atom;
    }
    const bool bounded = fs[sfl.greatest()].size() == 1 && fs[sfl.least()].size() == L.size();
    json atom_list = json::array();
    for (const auto& a : atoms) atom_list.push_back(set_label(L, a.members()));
    const bool is_mo2 = Lp == &m2;
    const std::size_t want_filters = is_mo2 ? 10 : 4;
    const std::size_t want_atoms = is_mo2 ? 4 : 2;
    ok = ok && fs.size() == want_filters && atoms.size() == want_atoms && join_mismatch == 0 && unsupported == 0 &&
         bounded;
    if (is_mo2) {
      // The atoms must be the choice filters {x, y, 1}.
      for (const auto& a : atoms) {
        ok = ok && a.size() == 3 && a.contains(L.top());
      }
    }
    f.add(is_mo2 ? "MO(2)" : "2^2", {{"filters", fs.size()},
                                     {"atoms", atom_list},
                                     {"join_mismatches", join_mismatch},
                                     {"proper_filters_without_atom", unsupported},
                                     {"bounded", bounded}});
  }
  r.pass = ok;
}

void check_up_embedding(CheckResult& r, const RunConfig&) {
  Facts f(r);
  bool ok = true;
  for (const auto& [name, L] : {NamedLattice{"MO(3)", mo(3)}, NamedLattice{"2^3", boolean_algebra(3)}}) {
    const auto rep = embed_up_properties(L);
    ok = ok && rep.injective && rep.order_preserving && rep.join_preserving;
    json entry = {{"pairs", rep.pairs_checked},
                  {"injective", rep.injective},
                  {"order_preserving", rep.order_preserving},
                  {"join_preserving", rep.join_preserving},
                  {"meet_preserving_reported", rep.meet_preserving}};
    if (rep.meet_counterexample) {
      entry["meet_counterexample"] = {L.label(rep.meet_counterexample->first),
                                      L.label(rep.meet_counterexample->second)};
    }
    f.add(name, entry);
  }
  r.pass = ok;
}

bool dim2_on_mo(std::size_t k, Facts& f, const RunConfig& cfg) {
  const FiniteOml L = mo(k);
  const SfLattice sfl = enumerate_filters(L, enumeration_cap(), cfg.jobs);
  const auto atoms = sf_atoms(sfl);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x : L.atoms()) {
    if (x < L.ortho(x)) pairs.emplace_back(x, L.ortho(x));
  }
  std::set<std::vector<Element>> expected;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<Element> s{L.top()};
    for (std::size_t i = 0; i < pairs.size(); ++i) s.push_back((mask >> i) & 1U ? pairs[i].second : pairs[i].first);
    std::sort(s.begin(), s.end());
    expected.insert(s);
  }
  std::set<std::vector<Element>> got;
  bool one_per_pair = true;
  json states = json::array();
  for (const auto& a : atoms) {
    got.insert(a.members().members());
    for (const auto& [p, q] : pairs) one_per_pair = one_per_pair && (a.contains(p) != a.contains(q));
    states.push_back(set_label(L, a.members()));
  }
  const bool ok = got == expected && atoms.size() == (std::size_t{1} << k) && one_per_pair;
  f.add("MO(" + std::to_string(k) + ")", {{"filters", sfl.size()},
                                          {"partial_states", atoms.size()},
                                          {"expected", std::size_t{1} << k},
                                          {"one_per_pair", one_per_pair},
                                          {"states", states}});
  return ok;
}

void check_dim2(CheckResult& r, const RunConfig& cfg) {
  Facts f(r);
  bool ok = true;
  for (std::size_t k = 1; k <= 4; ++k) ok = dim2_on_mo(k, f, cfg) && ok;
  r.pass = ok;
}

bool nonprincipal_in(std::size_t d, Facts& f) {
  const auto rep = nonprincipal_construction(d);
  json g = json::array();
  for (const auto& s : rep.g) g.push_back(s.to_string());
  json ips = json::array();
  for (const auto& row : rep.inner_products) {
    json jr = json::array();
    for (const auto& s : row) jr.push_back(s.to_string());
    ips.push_back(jr);
  }
  f.add("d=" + std::to_string(d), {{"G", g},
                                   {"inner_products", ips},
                                   {"all_nonorthogonal", rep.all_nonorthogonal},
                                   {"sasaki_stable", rep.sasaki_stable},
                                   {"meet_of_G", rep.meet_all.to_string()},
                                   {"no_common_ray", rep.meet_is_zero}});
  return rep.holds();
}

void check_nonprincipal(CheckResult& r, const RunConfig&) {
  Facts f(r);
  bool ok = true;
  for (std::size_t d : {3, 4, 5}) ok = nonprincipal_in(d, f) && ok;
  r.pass = ok;
}

void check_sasaki_projection(CheckResult& r, const RunConfig& cfg) {
  Facts f(r);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> dim_dist(2, 4);
  std::size_t mismatches = 0;
  std::map<std::size_t, std::size_t> per_dim;
  json first;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = dim_dist(rng);
    std::uniform_int_distribution<std::size_t> rank_dist(0, d);
    const Subspace x = random_subspace(rng, d, rank_dist(rng));
    const Subspace y = random_subspace(rng, d, rank_dist(rng));
    ++per_dim[d];
    if (sub_sasaki(x, y) != projection_image(x, y)) {
      if (mismatches == 0) first = {{"x", x.to_string()}, {"y", y.to_string()}};
      ++mismatches;
    }
  }
  json dims;
  for (const auto& [d, c] : per_dim) dims[std::to_string(d)] = c;
  f.add("trials", 1000);
  f.add("per_dimension", dims);
  f.add("mismatches", mismatches);
  if (mismatches) f.add("first_mismatch", first);
  r.pass = mismatches == 0;
}

void check_ks(CheckResult& r, const RunConfig&) {
  Facts f(r);
  const RayConfig cab = build_config(cabello_rays(), 4);
  const SearchResult res = search_coloring(cab);
  f.add("rays", cab.rays.size());
  f.add("bases", cab.bases.size());
  f.add("result", res.found ? "Selection" : "NoSelection");
  f.add("nodes", res.nodes);
  f.add("scope", "finite witness only: these 9 bases admit no selection");

  const RayConfig single = build_config({Vector{1, 0, 0}, Vector{0, 1, 0}, Vector{0, 0, 1}}, 3);
  const SearchResult sres = search_coloring(single);
  f.add("single_basis", {{"result", sres.found ? "Selection" : "NoSelection"}, {"selection", sres.selection}});
  r.pass = cab.rays.size() == 18 && cab.bases.size() == 9 && !res.found && sres.found;
}

void check_atom_forcing(CheckResult& r, const RunConfig& cfg) {
  Facts f(r);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 2);
  std::size_t reached = 0;
  std::size_t inconclusive = 0;
  std::size_t saturated = 0;
  std::size_t capped = 0;
  std::size_t max_rounds = 0;
  json first_inconclusive;
  int trials = 0;
  while (trials < 200) {
    Vector av = random_vector(rng, 3);
    if (is_zero_vector(av)) continue;
    const Subspace a = Subspace::span(3, {av});
    const Subspace x = random_subspace(rng, 3, rank_dist(rng));
    if (x.is_zero() || a.leq(x)) continue;
    ++trials;
    const ProbeReport rep = probe_atom_forcing(a, x);
    max_rounds = std::max(max_rounds, rep.rounds);
    if (rep.outcome == ProbeOutcome::ReachedBot) {
      ++reached;
    } else {
      ++inconclusive;
      saturated += rep.saturated;
      capped += rep.capped;
      if (inconclusive == 1) {
        first_inconclusive = {{"a", a.to_string()}, {"x", x.to_string()}, {"members", rep.members}};
      }
    }
  }
  f.add("pairs", trials);
  f.add("depth_cap", ProbeOptions{}.depth_cap);
  f.add("reached_bot", reached);
  f.add("inconclusive", inconclusive);
  f.add("inconclusive_saturated", saturated);
  f.add("inconclusive_capped", capped);
  f.add("max_rounds", max_rounds);
  if (inconclusive) f.add("first_inconclusive", first_inconclusive);
  r.pass = inconclusive == 0;
}

// --- auxiliary ids ---------------------------------------------------------

void check_dim2_single(CheckResult& r, const RunConfig& cfg, std::size_t k) {
  Facts f(r);
  r.pass = dim2_on_mo(k, f, cfg);
}

void check_nonprincipal_single(CheckResult& r, std::size_t d) {
  Facts f(r);
  r.pass = nonprincipal_in(d, f);
}

struct Entry {
  CheckInfo info;
  std::function<void(CheckResult&, const RunConfig&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t{
        {{"oml-axioms", 1, "OML axioms accept the constructors and reject O6"}, check_oml_axioms},
        {{"refinement-uniqueness", 2, "refinement map is single-valued"}, check_refinement},
        {{"e1-iff-e2", 3, "E1 and E2 agree on every assignment table"}, check_e1_e2},
        {{"roundtrip", 4, "descriptions and proper Sasaki filters round-trip"}, check_roundtrip},
        {{"principal-trace", 5, "Sasaki filters are exactly the sets with principal traces"},
         check_principal_trace_criterion},
        {{"sf-structure", 6, "SF(L) counts, join as intersection, atomicity"}, check_sf_structure},
        {{"up-embedding", 7, "x -> x-up is injective, monotone and join-preserving"}, check_up_embedding},
        {{"dim2", 8, "partial states of MO(k) are the choice filters"}, check_dim2},
        {{"nonprincipal", 9, "non-principal Sasaki filter in dimensions 3 to 5"}, check_nonprincipal},
        {{"sasaki-projection", 10, "lattice Sasaki projection equals orthogonal projection"},
         check_sasaki_projection},
        {{"ks-obstruction", 11, "18-ray configuration admits no selection"}, check_ks},
        {{"atom-forcing", 12, "probe reaches 0 from random (a, x) pairs"}, check_atom_forcing},
    };
    for (std::size_t k = 1; k <= 4; ++k) {
      t.push_back({{"dim2-mo" + std::to_string(k), 0, "partial states of MO(" + std::to_string(k) + ")"},
                   [k](CheckResult& r, const RunConfig& c) { check_dim2_single(r, c, k); }});
    }
    for (std::size_t d = 3; d <= 5; ++d) {
      t.push_back({{"nonprincipal-" + std::to_string(d), 0, "non-principal filter, d = " + std::to_string(d)},
                   [d](CheckResult& r, const RunConfig&) { check_nonprincipal_single(r, d); }});
    }
    return t;
  }();
  return table;
}

}  // namespace

bool RunReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string RunReport::to_json(bool include_timing) const {
  json j;
  j["command"] = command;
  j["config"] = {{"seed", config.seed}, {"jobs", config.jobs}, {"enumeration_cap", enumeration_cap()}};
  json results_j = json::array();
  for (const auto& r : results) {
    json facts = json::object();
    for (const auto& [k, v] : r.facts) facts[k] = json::parse(v);
    results_j.push_back({{"id", r.id}, {"criterion", r.criterion}, {"title", r.title}, {"pass", r.pass},
                         {"facts", facts}});
  }
  j["results"] = results_j;
  j["all_passed"] = all_passed();
  if (include_timing) {
    json t = json::object();
    for (const auto& r : results) t[r.id] = r.seconds;
    j["timing"] = t;
  }
  return j.dump(2) + "\n";
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CheckResult run_check(const std::string& id, const RunConfig& config) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    CheckResult r;
    r.id = e.info.id;
    r.criterion = e.info.criterion;
    r.title = e.info.title;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(r, config);
    } catch (const Error& err) {
      r.pass = false;
      r.facts.emplace_back("error", json(err.what()).dump());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw Error(ErrorCode::UnknownCheck, "unknown check id '" + id + "'");
}

RunReport reproduce(const std::vector<std::string>& ids, const RunConfig& config, const std::string& command) {
  std::vector<std::string> expanded;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& e : entries()) {
        if (e.info.criterion > 0) expanded.push_back(e.info.id);
      }
    } else {
      expanded.push_back(id);
    }
  }
  // Validate every id before running anything.
  for (const auto& id : expanded) {
    const auto& reg = check_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.id == id; })) {
      throw Error(ErrorCode::UnknownCheck, "unknown check id '" + id + "'");
    }
  }
  RunReport report;
  report.command = command;
  report.config = config;
  for (const auto& id : expanded) report.results.push_back(run_check(id, config));
  return report;
}

}  // namespace sasaki
