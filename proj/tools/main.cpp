// sasaki-lattice: construction, enumeration and reproduction front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sasaki/constructors.hpp"
#include "sasaki/descriptions.hpp"
#include "sasaki/dot.hpp"
#include "sasaki/ks_search.hpp"
#include "sasaki/measurements.hpp"
#include "sasaki/nonprincipal.hpp"
#include "sasaki/oml.hpp"
#include "sasaki/reproduce.hpp"
#include "sasaki/sasaki_filters.hpp"
#include "sasaki/subspace.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sasaki;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

json set_json(const FiniteOml& L, const ElementSet& s) {
  json labels = json::array();
  s.for_each([&](Element e) { labels.push_back(L.label(e)); });
  return {{"members", s.members()}, {"labels", labels}};
}

// A filter file is a JSON array of members, or {"members": [...]}; members
// are element indices or labels.
ElementSet read_element_set(const FiniteOml& L, const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (j.is_object()) j = j.at("members");
  if (!j.is_array()) throw Error(ErrorCode::ParseError, path + ": expected an array of members");
  ElementSet s(L.size());
  for (const auto& m : j) {
    if (m.is_number_unsigned()) {
      const auto e = m.get<Element>();
      L.check_element(e);
      s.insert(e);
    } else if (m.is_string()) {
      const auto e = L.find_label(m.get<std::string>());
      if (!e) throw Error(ErrorCode::ParseError, "unknown element label '" + m.get<std::string>() + "'");
      s.insert(*e);
    } else {
      throw Error(ErrorCode::ParseError, path + ": members must be indices or labels");
    }
  }
  return s;
}

Subspace read_subspace(const std::string& path) {
  const auto groups = read_vector_groups(path);
  if (groups.empty()) throw Error(ErrorCode::ParseError, path + ": no vectors");
  const std::size_t d = groups.front().front().size();
  return Subspace::span(d, groups.front());
}

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::size_t jobs = 1;

  std::string greechie;
  std::size_t mo_k = 0;
  std::size_t boolean_k = 0;
  std::string out;
  std::string relation = "covering";

  std::string lattice;
  std::string what = "measurements";
  std::size_t cap = 0;
  bool atoms_only = false;
  std::string dot;
  std::string filter;

  std::size_t dim = 3;
  std::string atom;
  std::string other;
  std::size_t depth = ProbeOptions{}.depth_cap;

  std::string rays;
  bool cabello = false;
  std::string certificate;

  std::vector<std::string> checks;
  bool no_timing = false;
  bool sf = false;
};

std::size_t cap_or_default(const Options& o) { return o.cap ? o.cap : enumeration_cap(); }

int cmd_build(const Options& o) {
  const int sources = !o.greechie.empty() + (o.mo_k > 0) + (o.boolean_k > 0);
  if (sources != 1) throw Error(ErrorCode::Malformed, "give exactly one of --greechie, --mo, --boolean");
  const auto form = o.relation == "full" ? RelationForm::Full : RelationForm::Covering;
  FiniteOml L = !o.greechie.empty() ? from_greechie(parse_greechie(read_file(o.greechie)))
                : o.mo_k > 0        ? mo(o.mo_k)
                                    : boolean_algebra(o.boolean_k);
  emit(to_json(L, form), o.out);
  return 0;
}

int cmd_enum(const Options& o) {
  const FiniteOml L = lattice_from_json(read_file(o.lattice));
  json out = json::array();
  if (o.what == "measurements") {
    for (const auto& m : enumerate_measurements(L, cap_or_default(o))) {
      out.push_back(set_json(L, ElementSet(L.size(), m.outcomes())));
    }
  } else {
    for (const auto& b : enumerate_fbas(L, cap_or_default(o))) out.push_back(set_json(L, b.elements()));
  }
  emit(out.dump(2) + "\n", o.out);
  return 0;
}

int cmd_filters(const Options& o) {
  const FiniteOml L = lattice_from_json(read_file(o.lattice));
  const SfLattice sfl = enumerate_filters(L, cap_or_default(o), o.jobs);
  const auto atoms = sf_atoms(sfl);
  json out = json::array();
  for (const auto& f : o.atoms_only ? atoms : sfl.filters()) {
    json entry = set_json(L, f.members());
    entry["proper"] = f.proper();
    entry["partial_state"] = std::find(atoms.begin(), atoms.end(), f) != atoms.end();
    out.push_back(entry);
  }
  if (!o.dot.empty()) write_text_file(o.dot, sf_to_dot(sfl));
  emit(out.dump(2) + "\n", o.out);
  return 0;
}

int cmd_describe(const Options& o) {
  const FiniteOml L = lattice_from_json(read_file(o.lattice));
  const SasakiFilter f = make_filter(L, read_element_set(L, o.filter));
  const DescriptionSpace space(L, cap_or_default(o));
  const PartialDescription d = filter_to_description(space, f);
  json out = json::array();
  for (std::size_t b = 0; b < space.size(); ++b) {
    out.push_back({{"fba", space.fbas()[b].elements().members()},
                   {"value", d(b)},
                   {"value_label", L.label(d(b))}});
  }
  emit(out.dump(2) + "\n", o.out);
  return 0;
}

int cmd_nonprincipal(const Options& o) {
  const auto rep = nonprincipal_construction(o.dim);
  json f = json::array();
  for (const auto& v : rep.f) f.push_back(vector_to_string(v));
  json g = json::array();
  for (const auto& s : rep.g) g.push_back(s.to_string());
  json ips = json::array();
  for (const auto& row : rep.inner_products) {
    json r = json::array();
    for (const auto& s : row) r.push_back(s.to_string());
    ips.push_back(r);
  }
  json out = {{"dim", rep.dim},
              {"f", f},
              {"G", g},
              {"inner_products", ips},
              {"all_nonorthogonal", rep.all_nonorthogonal},
              {"coatoms", rep.coatoms},
              {"sasaki_stable", rep.sasaki_stable},
              {"meet_of_G", rep.meet_all.to_string()},
              {"no_common_ray", rep.meet_is_zero},
              {"pass", rep.holds()}};
  emit(out.dump(2) + "\n", o.out);
  return rep.holds() ? 0 : kExitFail;
}

int cmd_probe(const Options& o) {
  const Subspace a = read_subspace(o.atom);
  const Subspace x = read_subspace(o.other);
  ProbeOptions opts;
  opts.depth_cap = o.depth;
  const auto rep = probe_atom_forcing(a, x, opts);
  json out = {{"atom", a.to_string()},
              {"other", x.to_string()},
              {"depth_cap", opts.depth_cap},
              {"outcome", to_string(rep.outcome)},
              {"rounds", rep.rounds},
              {"members", rep.members},
              {"saturated", rep.saturated},
              {"capped", rep.capped}};
  if (rep.witness) out["witness"] = {rep.witness->first.to_string(), rep.witness->second.to_string()};
  emit(out.dump(2) + "\n", o.out);
  return 0;
}

int cmd_ks(const Options& o) {
  std::vector<Vector> vectors;
  if (o.cabello) {
    vectors = cabello_rays();
  } else {
    if (o.rays.empty()) throw Error(ErrorCode::Malformed, "give --rays FILE or --cabello");
    for (auto& group : read_vector_groups(o.rays)) {
      for (auto& v : group) vectors.push_back(std::move(v));
    }
  }
  const std::size_t dim = o.cabello ? 4 : o.dim;
  const RayConfig cfg = build_config(vectors, dim);
  const SearchResult res = search_coloring(cfg);
  if (!o.certificate.empty()) write_text_file(o.certificate, certificate_json(cfg, res));
  json out = {{"dim", cfg.dim},
              {"rays", cfg.rays.size()},
              {"bases", cfg.bases.size()},
              {"result", res.found ? "Selection" : "NoSelection"},
              {"nodes", res.nodes}};
  if (res.found) out["selection"] = res.selection;
  emit(out.dump(2) + "\n", o.out);
  return 0;
}

int cmd_reproduce(const Options& o) {
  RunConfig cfg;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  std::vector<std::string> ids = o.checks.empty() ? std::vector<std::string>{"all"} : o.checks;
  std::string command = "reproduce";
  for (const auto& id : ids) command += " " + id;
  const RunReport rep = reproduce(ids, cfg, command);
  for (const auto& r : rep.results) {
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.title << "\n";
  }
  emit(rep.to_json(!o.no_timing), o.out);
  return rep.all_passed() ? 0 : kExitFail;
}

int cmd_export_dot(const Options& o) {
  const FiniteOml L = lattice_from_json(read_file(o.lattice));
  const std::string text = o.sf ? sf_to_dot(enumerate_filters(L, cap_or_default(o), o.jobs)) : oml_to_dot(L);
  emit(text, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial descriptions of quantum states over finite orthomodular lattices"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration")->capture_default_str()->check(CLI::PositiveNumber);

  auto* build = app.add_subcommand("build", "Construct a lattice and write its JSON");
  build->add_option("--greechie", o.greechie, "Greechie diagram file")->check(CLI::ExistingFile);
  build->add_option("--mo", o.mo_k, "MO(K)")->check(CLI::PositiveNumber);
  build->add_option("--boolean", o.boolean_k, "Boolean algebra 2^K")->check(CLI::PositiveNumber);
  build->add_option("--relation", o.relation, "Order encoding")->check(CLI::IsMember({"covering", "full"}));
  build->add_option("--out", o.out, "Output file (default stdout)");

  auto* en = app.add_subcommand("enum", "Enumerate measurements or boolean subalgebras");
  en->add_option("--lattice", o.lattice)->required()->check(CLI::ExistingFile);
  en->add_option("--what", o.what)->check(CLI::IsMember({"measurements", "fbas"}));
  en->add_option("--cap", o.cap, "Enumeration cap on |L|");
  en->add_option("--out", o.out);

  auto* filters = app.add_subcommand("filters", "Enumerate the Sasaki filters of a lattice");
  filters->add_option("--lattice", o.lattice)->required()->check(CLI::ExistingFile);
  filters->add_flag("--atoms-only", o.atoms_only, "Only the partial states");
  filters->add_option("--dot", o.dot, "Write the Hasse diagram of SF(L)");
  filters->add_option("--cap", o.cap);
  filters->add_option("--out", o.out);

  auto* describe = app.add_subcommand("describe", "Description table induced by a proper filter");
  describe->add_option("--lattice", o.lattice)->required()->check(CLI::ExistingFile);
  describe->add_option("--filter", o.filter)->required()->check(CLI::ExistingFile);
  describe->add_option("--cap", o.cap);
  describe->add_option("--out", o.out);

  auto* nonprincipal = app.add_subcommand("nonprincipal", "Non-principal Sasaki filter in dimension D");
  nonprincipal->add_option("--dim", o.dim)->required();
  nonprincipal->add_option("--out", o.out);

  auto* probe = app.add_subcommand("probe-forcing", "Saturate {a, x} looking for the zero space");
  probe->add_option("--atom", o.atom)->required()->check(CLI::ExistingFile);
  probe->add_option("--other", o.other)->required()->check(CLI::ExistingFile);
  probe->add_option("--depth", o.depth)->capture_default_str();
  probe->add_option("--out", o.out);

  auto* ks = app.add_subcommand("ks", "Search a ray configuration for a selection");
  ks->add_option("--rays", o.rays)->check(CLI::ExistingFile);
  ks->add_flag("--cabello", o.cabello, "Use the built-in 18-ray configuration of Q^4");
  ks->add_option("--dim", o.dim);
  ks->add_option("--certificate", o.certificate, "Write the search certificate as JSON");
  ks->add_option("--out", o.out);

  auto* repro = app.add_subcommand("reproduce", "Run reproduction checks");
  repro->add_option("checks", o.checks, "Check ids (default: all)");
  repro->add_flag("--no-timing", o.no_timing, "Omit timing from the report");
  repro->add_option("--out", o.out);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram of a lattice or of its SF(L)");
  dot->add_option("--lattice", o.lattice)->required()->check(CLI::ExistingFile);
  dot->add_flag("--sf", o.sf, "Draw SF(L) instead of L");
  dot->add_option("--cap", o.cap);
  dot->add_option("--out", o.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(o);
    if (*en) return cmd_enum(o);
    if (*filters) return cmd_filters(o);
    if (*describe) return cmd_describe(o);
    if (*nonprincipal) return cmd_nonprincipal(o);
    if (*probe) return cmd_probe(o);
    if (*ks) return cmd_ks(o);
    if (*repro) return cmd_reproduce(o);
    if (*dot) return cmd_export_dot(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
