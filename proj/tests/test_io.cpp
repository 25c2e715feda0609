#include <algorithm>
#include <functional>
#include <string>

#include "doctest.h"
#include "modlab/errors.hpp"
#include "modlab/io.hpp"

using namespace modlab;

namespace {

std::string fixture(const std::string& name) {
  return std::string(MODLAB_FIXTURES) + "/" + name;
}

// Message of the SpecError a callable throws; empty when it does not throw.
std::string thrown(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("ring files load into the expected algebras") {
  AlgebraPtr r3 = load_ring(fixture("r3.ring"));
  CHECK(r3->dim() == 5);
  CHECK(r3->radical().dim() == 2);
  CHECK(r3->field().modulus() == 2);
  CHECK(same_algebra(r3, ring_fan3(2)));
  CHECK(is_left_serial(r3));
  CHECK(!is_right_serial(r3));

  AlgebraPtr r4 = load_ring(fixture("r4.ring"));
  CHECK(r4->dim() == 7);
  CHECK(r4->radical().dim() == 3);
  CHECK(same_algebra(r4, ring_fan4(2)));

  CHECK(same_algebra(load_ring(fixture("r3_p3.ring")), ring_fan3(3)));
  CHECK(load_ring(fixture("diag.ring"))->radical().dim() == 0);
}

TEST_CASE("the quotient key removes labels") {
  AlgebraPtr a = load_ring(fixture("chain3q.ring"));
  CHECK(a->dim() == 5);
  CHECK(a->label_index({1, 3}) == -1);
  CHECK(a->label_index({1, 2}) >= 0);
  CHECK(a->label_index({2, 3}) >= 0);
  // The long path is gone, so the radical squares to zero.
  std::vector<uint8_t> e12(a->dim(), 0), e23(a->dim(), 0);
  e12[a->label_index({1, 2})] = 1;
  e23[a->label_index({2, 3})] = 1;
  auto prod = a->multiply(e12, e23);
  CHECK(std::all_of(prod.begin(), prod.end(),
                    [](uint8_t x) { return x == 0; }));
}

TEST_CASE("ring parse errors carry file and line") {
  std::string msg =
      thrown([] { load_ring(fixture("bad_transitive.ring")); });
  CHECK(contains(msg, "bad_transitive.ring:4:"));
  CHECK(contains(msg, "not transitive"));
  CHECK(contains(msg, "e(1,3)"));

  msg = thrown([] { load_ring(fixture("bad_field.ring")); });
  CHECK(contains(msg, "bad_field.ring:2:"));
  CHECK(contains(msg, "prime"));

  msg = thrown([] {
    parse_ring("field = 2\nsize = 2\nrelation = [[1,2],[2,1]]", "x");
  });
  CHECK(contains(msg, "x:3:"));
  CHECK(contains(msg, "antisymmetric"));

  CHECK(contains(thrown([] { parse_ring("field = 2\nfield = 3", "x"); }),
                 "x:2: duplicate `field`"));
  CHECK(contains(thrown([] { parse_ring("field = 2\nsize = 2", "x"); }),
                 "missing `relation`"));
  CHECK(contains(thrown([] { parse_ring("hello", "x"); }),
                 "x:1: expected `key = value`"));
  CHECK(contains(thrown([] { parse_ring("color = red", "x"); }),
                 "x:1: unknown key `color`"));
  CHECK(contains(thrown([] { parse_ring("size = few", "x"); }),
                 "x:1: size must be an integer"));
  CHECK(contains(
      thrown([] { parse_ring("relation = [[1,2],[3]]", "x"); }),
      "pairs"));
  CHECK(contains(thrown([] { load_ring("no_such_file.ring"); }),
                 "cannot open"));
}

TEST_CASE("module expressions build the named constructions") {
  AlgebraPtr a = load_ring(fixture("r3.ring"));
  CHECK(is_isomorphic(parse_module(a, "projective right 1"),
                      projective_right(a, 1)));
  CHECK(is_isomorphic(parse_module(a, "simple 2"), simple_module(a, 2)));
  CHECK(is_isomorphic(parse_module(a, "injective 3"),
                      indecomposable_injective(a, 3)));
  CHECK(parse_module(a, "sum simple 2 simple 3").dim() == 2);
  CHECK(is_isomorphic(parse_module(a, "sum (simple 2) (simple 3)"),
                      direct_sum({simple_module(a, 2), simple_module(a, 3)})));

  // P(1) has coordinates e11, e12, e13; killing the e13 line leaves the
  // injective with socle at vertex 2.
  RightModule q =
      parse_module(a, "quotient projective right 1 by spin [[0,0,1]]");
  CHECK(is_isomorphic(q, indecomposable_injective(a, 2)));

  RightModule s =
      parse_module(a, "submodule projective right 1 spanned [[0,1,0],[0,0,1]]");
  CHECK(s.dim() == 2);
  CHECK(socle_factors(s) == std::map<int, int>{{2, 1}, {3, 1}});

  // Explicit action form: the simple at vertex 2 has e22 acting as 1 and
  // every other label acting as 0, in basis order e11,e12,e13,e22,e33.
  RightModule act = parse_module(
      a, "action = [[[0]], [[0]], [[0]], [[1]], [[0]]]");
  CHECK(is_isomorphic(act, simple_module(a, 2)));

  // Entries reduce mod p: -1 is a unit, so this spans all of P(1).
  AlgebraPtr b = load_ring(fixture("r3_p3.ring"));
  CHECK(parse_module(b, "submodule projective right 1 spanned [[-1,0,0]]")
            .dim() == 3);
}

TEST_CASE("the bundled length-5 module script matches its construction") {
  AlgebraPtr r4 = load_ring(fixture("r4.ring"));
  RightModule b = load_module(r4, fixture("b_over_r4.mod"));
  CHECK(b.dim() == 5);
  CHECK(composition_length(b) == 5);
  GluedModule g = example2_module();
  CHECK(is_isomorphic(b, restrict_to(g.ambient, g.b)));
}

TEST_CASE("module parse errors name the problem") {
  AlgebraPtr a = load_ring(fixture("r3.ring"));
  auto bad = [&](const std::string& text) {
    return thrown([&] { parse_module(a, text, "m"); });
  };
  CHECK(contains(bad("colimit simple 2"), "unknown module form"));
  CHECK(contains(bad("colimit simple 2"), "m: "));
  CHECK(contains(bad("simple 2 simple 3"), "unexpected trailing input"));
  CHECK(contains(bad("simple x"), "expected a vertex number"));
  CHECK(contains(bad("projective up 1"), "expected `right` or `left`"));
  CHECK(contains(bad("sum simple 2"), "expected a module expression"));
  CHECK(contains(bad("quotient simple 2 by spin [[0,1]]"), "1 entries"));
  CHECK(contains(bad("submodule simple 2 spanned [0,1]"), "rows"));
  CHECK(contains(bad("simple 1 ["), "unbalanced brackets"));
  CHECK(contains(bad(""), "empty module expression"));
  CHECK(contains(bad("simple 4"), "no vertex 4"));
  CHECK(contains(thrown([&] { load_module(a, "nowhere.mod"); }),
                 "cannot open"));
}

TEST_CASE("reports round-trip and the text mirrors the document") {
  AlgebraPtr a = load_ring(fixture("r3.ring"));
  PropertyProfile p = property_profile(projective_right(a, 1));
  Report r;
  r.command = "module report";
  r.body = profile_json(p);
  r.notices.push_back("sample notice");
  r.timing_ms = 1.5;

  Json doc = r.to_json();
  CHECK(doc["tool"] == kToolName);
  CHECK(doc["schema"] == kSchemaVersion);
  CHECK(Json::parse(doc.dump()) == doc);

  // Identical flag values in both formats.
  std::string text = r.to_text();
  CHECK(contains(text, "injective: " + doc["body"]["injective"]
                                           .get<std::string>()));
  CHECK(contains(text, "quasi_injective: no"));
  CHECK(contains(text, "automorphism_invariant: yes"));
  CHECK(contains(text, "pseudo_injective: yes"));
  CHECK(contains(text, "notice: sample notice"));
  CHECK(contains(text, "timing_ms:"));

  // Stable across recomputation.
  PropertyProfile p2 = property_profile(projective_right(a, 1));
  CHECK(profile_json(p2).dump() == profile_json(p).dump());
}

TEST_CASE("profile documents mirror every profile field") {
  AlgebraPtr a = load_ring(fixture("r3.ring"));
  PropertyProfile p = property_profile(projective_right(a, 1));
  Json j = profile_json(p);
  CHECK(j["dim"] == p.dim);
  CHECK(j["length"] == p.length);
  CHECK(j["goldie"] == p.goldie);
  CHECK(j["end_count"] == p.end_count);
  CHECK(j["hull_aut_count"] == p.hull_aut_count);
  CHECK(j["socle"] == Json{{"2", 1}, {"3", 1}});
  CHECK(j["injective"] == flag_name(p.injective));
  CHECK(j["cs"] == flag_name(p.cs()));
  CHECK(j["continuous"] == flag_name(p.continuous()));
  CHECK(j["square_free_socle"] == p.square_free_socle);
  CHECK(j["witnesses"].size() == p.witnesses.size());
}

TEST_CASE("census documents carry one row per representative") {
  AlgebraPtr d = load_ring(fixture("diag.ring"));
  Census c = build_census(d, {{1, 1}, {2, 1}}, 6);
  Json j = census_json(c);
  CHECK(j["classes"] == 4);
  CHECK(j["partial"] == false);
  CHECK(j["representatives"].size() == 4);
  for (const Json& row : j["representatives"]) {
    // Over a semisimple algebra every module is injective.
    CHECK(row["injective"] == "yes");
    CHECK(row["automorphism_invariant"] == "yes");
  }
  CHECK(j["representatives"][0]["name"] == "r0");
  CHECK(j["representatives"][0]["socle"] == "-");

  Report r;
  r.command = "census";
  r.body = j;
  std::string text = r.to_text();
  CHECK(contains(text, "name"));
  CHECK(contains(text, "r0"));
  CHECK(contains(text, "classes: 4"));
}

TEST_CASE("verdict documents keep ids and notes") {
  TheoremVerdict v = scenario_example1();
  Json j = verdict_json(v);
  CHECK(j["id"] == "example-1");
  CHECK(j["holds"] == true);
  CHECK(j["applicable"] == true);
  CHECK(j["instances_checked"] == v.instances_checked);
  CHECK(j["notes"].size() == v.notes.size());
  CHECK(Json::parse(j.dump()) == j);
}
