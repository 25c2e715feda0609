#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "modlab/algebra.hpp"
#include "modlab/envelope.hpp"
#include "modlab/module.hpp"
#include "modlab/theorems.hpp"

namespace modlab {

using Json = nlohmann::ordered_json;

// Ring specification text: `field = <p>`, `size = <n>`,
// `relation = [[i,j],...]` (the diagonal is implied), optional
// `quotient = [[i,j],...]`. '#' starts a comment. Errors carry
// "<origin>:<line>: <message>" diagnostics.
AlgebraPtr parse_ring(const std::string& text,
                      const std::string& origin = "<ring>");
AlgebraPtr load_ring(const std::string& path);

// Module expression over a fixed algebra. Keyword-led prefix grammar, so no
// parentheses are needed (they are accepted for grouping):
//   projective right <v> | projective left <v> | simple <v> | injective <v>
//   | sum <m> <m>
//   | quotient <m> by spin [[...],...]
//   | submodule <m> spanned [[...],...]
//   | action = [[[row],...],...]        one matrix per algebra basis label
// Vectors are coordinate rows of the inner module; entries reduce mod p.
RightModule parse_module(const AlgebraPtr& a, const std::string& text,
                         const std::string& origin = "<module>");
RightModule load_module(const AlgebraPtr& a, const std::string& path);

// Serializers shared by the report formats. Flags map to "yes", "no",
// "unknown"; integer-keyed multiplicity maps become string-keyed objects.
Json profile_json(const PropertyProfile& p);
Json verdict_json(const TheoremVerdict& v);
Json algebra_json(const AlgebraPtr& a);
// Census summary plus one row per representative with its hierarchy flags.
Json census_json(const Census& c, const Caps& caps = {});

// One self-describing document per run. Structured output is stable across
// reruns except for the timing field; the text rendering is generated from
// the same document, so both formats present identical values.
struct Report {
  std::string command;
  Json body;
  std::vector<std::string> notices;
  double timing_ms = 0.0;

  Json to_json() const;
  std::string to_text() const;
};

extern const char* const kToolName;
extern const int kSchemaVersion;

}  // namespace modlab
