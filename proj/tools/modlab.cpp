#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modlab/errors.hpp"
#include "modlab/exec.hpp"
#include "modlab/io.hpp"

using namespace modlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Output {
  std::string format = "text";
  std::string out;
  std::string caps_text;
  bool serial = false;
};

void add_common(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--out", o.out, "Write the report to this file");
  cmd->add_option("--caps", o.caps_text,
                  "Enumeration caps as vectors,hom-elements,lattice");
  cmd->add_flag("--serial", o.serial, "Use the serial reference kernels");
}

std::vector<uint64_t> split_counts(const std::string& s, const char* what) {
  std::vector<uint64_t> vals;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      vals.push_back(std::stoull(part, &used));
      if (used != part.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw SpecError(std::string(what) + " expects comma-separated " +
                      "nonnegative integers, got `" + part + "`");
    }
  }
  return vals;
}

Caps caps_from(const std::string& s) {
  if (s.empty()) return {};
  std::vector<uint64_t> vals = split_counts(s, "--caps");
  if (vals.size() != 3 || vals[0] == 0 || vals[1] == 0 || vals[2] == 0)
    throw SpecError("--caps expects three positive integers: "
                    "vectors,hom-elements,lattice");
  Caps c;
  c.max_vectors = vals[0];
  c.max_hom_elements = vals[1];
  c.max_lattice = vals[2];
  return c;
}

void emit_report(Report& r, const Output& o, Clock::time_point t0) {
  r.timing_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::string payload = o.format == "structured"
                            ? r.to_json().dump(2) + "\n"
                            : r.to_text();
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw SpecError("cannot write " + o.out);
  f << payload;
}

int run_ring_check(const std::string& path, const Output& o,
                   Clock::time_point t0) {
  AlgebraPtr a = load_ring(path);
  AlgebraCheck chk = verify_algebra(*a);
  Report r;
  r.command = "ring check " + path;
  r.body["algebra"] = algebra_json(a);
  r.body["audit_ok"] = chk.ok;
  r.body["audit_problems"] = chk.problems;
  if (!chk.ok) r.notices.push_back("algebra audit failed");
  emit_report(r, o, t0);
  return chk.ok ? 0 : 2;
}

int run_module_report(const std::string& ring_path, const std::string& spec,
                      const Caps& caps, const Output& o,
                      Clock::time_point t0) {
  AlgebraPtr a = load_ring(ring_path);
  RightModule m = std::filesystem::exists(spec)
                      ? load_module(a, spec)
                      : parse_module(a, spec, "<module>");
  PropertyProfile p = property_profile(m, caps);
  Report r;
  r.command = "module report " + ring_path + " " + spec;
  r.body["algebra"] = algebra_json(a);
  r.body["module"] = m.name();
  r.body["profile"] = profile_json(p);
  int rc = 0;
  const std::pair<const char*, Flag> flags[] = {
      {"injective", p.injective},
      {"quasi_injective", p.quasi_injective},
      {"pseudo_injective", p.pseudo_injective},
      {"automorphism_invariant", p.automorphism_invariant},
      {"c1", p.c1},
      {"c2", p.c2},
      {"c3", p.c3},
      {"quasi_projective", p.quasi_projective},
  };
  for (const auto& [name, flag] : flags) {
    if (flag != Flag::unknown) continue;
    rc = 3;
    auto it = p.witnesses.find(name);
    r.notices.push_back(std::string(name) + " undecided: " +
                        (it == p.witnesses.end() ? "cap exceeded"
                                                 : it->second));
  }
  emit_report(r, o, t0);
  return rc;
}

int run_census(const std::string& ring_path, const std::string& bounds_text,
               int max_length, const Caps& caps, const Output& o,
               Clock::time_point t0) {
  AlgebraPtr a = load_ring(ring_path);
  std::vector<uint64_t> vals = split_counts(bounds_text, "--bounds");
  if (vals.size() != a->vertices().size())
    throw SpecError("--bounds needs one value per vertex, here " +
                    std::to_string(a->vertices().size()));
  std::map<int, int> bounds;
  for (size_t i = 0; i < vals.size(); ++i)
    bounds[a->vertices()[i]] = int(vals[i]);
  Census c = build_census(a, bounds, max_length, caps);
  Report r;
  r.command = "census " + ring_path + " --bounds " + bounds_text +
              " --max-length " + std::to_string(max_length);
  r.body = census_json(c, caps);
  if (c.partial)
    r.notices.push_back("enumeration hit a cap; the census is partial");
  emit_report(r, o, t0);
  return c.partial ? 3 : 0;
}

int run_paper(const std::string& suite, const Caps& caps, const Output& o,
              Clock::time_point t0) {
  std::vector<TheoremVerdict> verdicts;
  if (suite == "example1") {
    verdicts.push_back(scenario_example1());
  } else if (suite == "example2") {
    verdicts.push_back(scenario_example2());
  } else {
    verdicts = run_full_suite(caps);
  }
  Report r;
  r.command = "paper " + suite;
  Json arr = Json::array();
  bool all_hold = true;
  std::string first_fail;
  for (const TheoremVerdict& v : verdicts) {
    arr.push_back(verdict_json(v));
    if (!v.holds && first_fail.empty())
      first_fail = v.id + " over " + v.universe + ": " + v.witness;
    all_hold = all_hold && v.holds;
  }
  r.body["verdicts"] = arr;
  r.body["all_hold"] = all_hold;
  if (!all_hold) r.notices.push_back("failed: " + first_fail);
  emit_report(r, o, t0);
  if (!all_hold) std::cerr << "failed: " << first_fail << "\n";
  return all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decision procedures for finite modules over poset pattern algebras"};
  app.require_subcommand(1);
  Output o;

  auto* ring = app.add_subcommand("ring", "Ring file operations");
  ring->require_subcommand(1);
  std::string ring_path;
  CLI::App* check =
      ring->add_subcommand("check", "Parse, audit and summarize a ring file");
  check->add_option("path", ring_path, "Ring file")->required();
  add_common(check, o);

  auto* mod = app.add_subcommand("module", "Module operations");
  mod->require_subcommand(1);
  std::string mr_ring, mr_spec;
  CLI::App* mrep = mod->add_subcommand(
      "report", "Full property profile of one module");
  mrep->add_option("ring", mr_ring, "Ring file")->required();
  mrep->add_option("module", mr_spec, "Module file or inline expression")
      ->required();
  add_common(mrep, o);

  std::string census_ring, bounds_text;
  int max_length = 6;
  CLI::App* cen = app.add_subcommand(
      "census", "Isomorphism classes within socle multiplicity bounds");
  cen->add_option("ring", census_ring, "Ring file")->required();
  cen->add_option("--bounds", bounds_text,
                  "Socle multiplicity bound per vertex, ascending")
      ->required();
  cen->add_option("--max-length", max_length, "Composition length ceiling");
  add_common(cen, o);

  std::string suite;
  CLI::App* pap = app.add_subcommand(
      "paper", "Run the worked scenarios and the theorem checks");
  pap->add_option("suite", suite, "example1, example2 or all")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "all"}));
  add_common(pap, o);

  CLI11_PARSE(app, argc, argv);

  Clock::time_point t0 = Clock::now();
  try {
    if (o.serial) exec::set_policy(exec::Policy::serial);
    Caps caps = caps_from(o.caps_text);
    if (*check) return run_ring_check(ring_path, o, t0);
    if (*mrep) return run_module_report(mr_ring, mr_spec, caps, o, t0);
    if (*cen)
      return run_census(census_ring, bounds_text, max_length, caps, o, t0);
    if (*pap) return run_paper(suite, caps, o, t0);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
