#include "modlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "modlab/errors.hpp"

namespace modlab {

const char* const kToolName = "modlab 1.0.0";
const int kSchemaVersion = 1;

namespace {

[[noreturn]] void fail_at(const std::string& origin, int line,
                          const std::string& msg) {
  throw SpecError(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

int parse_int(const std::string& origin, int line, const std::string& s,
              const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail_at(origin, line, what + " must be an integer, got `" + s + "`");
  }
}

// JSON value [[i,j],...] as labels.
std::vector<Label> parse_pairs(const std::string& origin, int line,
                               const std::string& s,
                               const std::string& what) {
  Json j;
  try {
    j = Json::parse(s);
  } catch (const std::exception& e) {
    fail_at(origin, line, what + ": " + e.what());
  }
  if (!j.is_array())
    fail_at(origin, line, what + " must be a list of [i,j] pairs");
  std::vector<Label> out;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail_at(origin, line,
              what + " entries must be [i,j] pairs, got " + e.dump());
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

std::string file_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Module expression tokens: words, '=', '(', ')', and whole bracket blobs.
struct Tok {
  std::string text;
  bool bracket = false;
};

std::vector<Tok> lex_module(const std::string& text,
                            const std::string& origin) {
  std::vector<Tok> out;
  size_t i = 0, n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '[') {
      int depth = 0;
      size_t j = i;
      for (; j < n; ++j) {
        if (text[j] == '[') ++depth;
        if (text[j] == ']' && --depth == 0) {
          ++j;
          break;
        }
      }
      if (depth != 0) throw SpecError(origin + ": unbalanced brackets");
      out.push_back({text.substr(i, j - i), true});
      i = j;
    } else if (c == '(' || c == ')' || c == '=') {
      out.push_back({std::string(1, c), false});
      ++i;
    } else {
      size_t j = i;
      while (j < n && !std::isspace(static_cast<unsigned char>(text[j])) &&
             std::string("()[]=#").find(text[j]) == std::string::npos)
        ++j;
      out.push_back({text.substr(i, j - i), false});
      i = j;
    }
  }
  return out;
}

struct ModuleParser {
  AlgebraPtr a;
  std::string origin;
  std::vector<Tok> toks;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::string near =
        pos < toks.size() ? "`" + toks[pos].text + "`" : "end of input";
    throw SpecError(origin + ": " + msg + " near " + near);
  }

  bool at_end() const { return pos == toks.size(); }

  Tok take(const std::string& what) {
    if (at_end()) fail("expected " + what);
    return toks[pos++];
  }

  void expect_word(const std::string& w) {
    Tok t = take("`" + w + "`");
    if (t.text != w) {
      --pos;
      fail("expected `" + w + "`");
    }
  }

  int take_vertex() {
    Tok t = take("a vertex number");
    try {
      size_t used = 0;
      int v = std::stoi(t.text, &used);
      if (used != t.text.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      --pos;
      fail("expected a vertex number");
    }
  }

  Json take_list(const std::string& what) {
    Tok t = take(what);
    if (!t.bracket) {
      --pos;
      fail("expected " + what);
    }
    try {
      return Json::parse(t.text);
    } catch (const std::exception& e) {
      --pos;
      fail(std::string("bad ") + what + ": " + e.what());
    }
  }

  // Rows of integers, reduced into the field, with a fixed expected width.
  std::vector<std::vector<uint8_t>> rows_of(const Json& j, int width,
                                            const std::string& what) {
    const PrimeField& f = a->field();
    if (!j.is_array() || j.empty()) fail(what + " must be a nonempty list");
    std::vector<std::vector<uint8_t>> rows;
    for (const Json& r : j) {
      if (!r.is_array() || int(r.size()) != width)
        fail(what + " rows must have " + std::to_string(width) +
             " entries, got " + r.dump());
      std::vector<uint8_t> row;
      for (const Json& x : r) {
        if (!x.is_number_integer())
          fail(what + " entries must be integers, got " + x.dump());
        row.push_back(uint8_t(f.reduce(x.get<long long>())));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  RightModule expr() {
    Tok t = take("a module expression");
    if (t.text == "(") {
      RightModule m = expr();
      expect_word(")");
      return m;
    }
    if (t.text == "projective") {
      Tok side = take("`right` or `left`");
      if (side.text != "right" && side.text != "left") {
        --pos;
        fail("expected `right` or `left`");
      }
      int v = take_vertex();
      return side.text == "right" ? projective_right(a, v)
                                  : projective_left(a, v);
    }
    if (t.text == "simple") return simple_module(a, take_vertex());
    if (t.text == "injective") return indecomposable_injective(a, take_vertex());
    if (t.text == "sum") {
      RightModule first = expr();
      RightModule second = expr();
      return direct_sum({first, second});
    }
    if (t.text == "quotient") {
      RightModule m = expr();
      expect_word("by");
      expect_word("spin");
      auto rows = rows_of(take_list("a vector list"), m.dim(), "spin vectors");
      return quotient_module(m, spin(m, rows).space).first;
    }
    if (t.text == "submodule") {
      RightModule m = expr();
      expect_word("spanned");
      auto rows =
          rows_of(take_list("a vector list"), m.dim(), "spanning vectors");
      return restrict_to(m, spin(m, rows).space);
    }
    if (t.text == "action") {
      expect_word("=");
      Json mats = take_list("an action matrix list");
      if (!mats.is_array() || mats.empty())
        fail("action must be a list of matrices");
      int dim = 0;
      if (mats[0].is_array()) dim = int(mats[0].size());
      std::vector<Mat> actions;
      for (const Json& mj : mats) {
        if (!mj.is_array()) fail("each action entry must be a matrix");
        std::vector<std::vector<int>> rows;
        for (const Json& r : mj) {
          if (!r.is_array() || int(r.size()) != dim)
            fail("action matrices must be square of equal size");
          rows.emplace_back();
          for (const Json& x : r) {
            if (!x.is_number_integer())
              fail("matrix entries must be integers, got " + x.dump());
            rows.back().push_back(x.get<int>());
          }
        }
        if (int(rows.size()) != dim)
          fail("action matrices must be square of equal size");
        actions.push_back(Mat::from_rows(a->field(), rows));
      }
      return make_module(a, std::move(actions), "action");
    }
    --pos;
    fail("unknown module form");
  }
};

Json intmap_json(const std::map<int, int>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

std::string socle_text(const std::map<int, int>& m) {
  if (m.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) os << " ";
    first = false;
    os << k << ":" << v;
  }
  return os.str();
}

// Flag string for a predicate that may hit a cap.
template <class Fn>
std::string guarded_flag(Fn&& fn) {
  try {
    return fn() ? "yes" : "no";
  } catch (const CapExceeded&) {
    return "unknown";
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_object(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [k, v] : j.items()) {
    (void)k;
    if (v.is_structured()) return false;
  }
  return true;
}

// Arrays of same-shaped flat objects render as an aligned table.
bool table_like(const Json& arr) {
  if (!arr.is_array() || arr.empty() || !is_flat_object(arr[0])) return false;
  std::vector<std::string> keys;
  for (const auto& [k, v] : arr[0].items()) {
    (void)v;
    keys.push_back(k);
  }
  for (const Json& e : arr) {
    if (!is_flat_object(e)) return false;
    std::vector<std::string> got;
    for (const auto& [k, v] : e.items()) {
      (void)v;
      got.push_back(k);
    }
    if (got != keys) return false;
  }
  return true;
}

void render_table(std::ostream& os, const Json& arr, int indent) {
  std::string pad(indent, ' ');
  std::vector<std::string> keys;
  for (const auto& [k, v] : arr[0].items()) {
    (void)v;
    keys.push_back(k);
  }
  std::vector<size_t> width;
  for (const std::string& k : keys) width.push_back(k.size());
  for (const Json& e : arr)
    for (size_t i = 0; i < keys.size(); ++i)
      width[i] = std::max(width[i], scalar_text(e[keys[i]]).size());
  auto row = [&](const std::vector<std::string>& cells) {
    os << pad;
    for (size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size())
        os << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << "\n";
  };
  row(keys);
  for (const Json& e : arr) {
    std::vector<std::string> cells;
    for (const std::string& k : keys) cells.push_back(scalar_text(e[k]));
    row(cells);
  }
}

void render(std::ostream& os, const Json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() && !v.empty()) {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      } else if (v.is_array() && table_like(v)) {
        os << pad << k << ":\n";
        render_table(os, v, indent + 2);
      } else if (v.is_array() && !v.empty() &&
                 std::any_of(v.begin(), v.end(), [](const Json& e) {
                   return e.is_structured();
                 })) {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      } else {
        os << pad << k << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json& e : j) {
      if (e.is_structured()) {
        os << pad << "-\n";
        render(os, e, indent + 2);
      } else {
        os << pad << "- " << scalar_text(e) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

AlgebraPtr parse_ring(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<int> field, size;
  std::optional<std::vector<Label>> relation, quot;
  int relation_line = 0, quotient_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(strip_comment(line));
    if (s.empty()) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      fail_at(origin, lineno, "expected `key = value`, got `" + s + "`");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "field") {
      if (field) fail_at(origin, lineno, "duplicate `field`");
      field = parse_int(origin, lineno, value, "field");
      try {
        PrimeField probe(*field);
      } catch (const SpecError& e) {
        fail_at(origin, lineno, e.what());
      }
    } else if (key == "size") {
      if (size) fail_at(origin, lineno, "duplicate `size`");
      size = parse_int(origin, lineno, value, "size");
      if (*size <= 0) fail_at(origin, lineno, "size must be positive");
    } else if (key == "relation") {
      if (relation) fail_at(origin, lineno, "duplicate `relation`");
      relation = parse_pairs(origin, lineno, value, "relation");
      relation_line = lineno;
    } else if (key == "quotient") {
      if (quot) fail_at(origin, lineno, "duplicate `quotient`");
      quot = parse_pairs(origin, lineno, value, "quotient");
      quotient_line = lineno;
    } else {
      fail_at(origin, lineno, "unknown key `" + key + "`");
    }
  }
  if (!field) throw SpecError(origin + ": missing `field`");
  if (!size) throw SpecError(origin + ": missing `size`");
  if (!relation) throw SpecError(origin + ": missing `relation`");
  AlgebraPtr a;
  try {
    a = algebra_from_pattern(PosetPattern::make(*size, *relation), *field);
  } catch (const SpecError& e) {
    fail_at(origin, relation_line, e.what());
  }
  if (quot) {
    try {
      a = quotient_algebra(a, MonomialIdeal{*quot});
    } catch (const SpecError& e) {
      fail_at(origin, quotient_line, e.what());
    }
  }
  return a;
}

AlgebraPtr load_ring(const std::string& path) {
  return parse_ring(file_text(path), path);
}

RightModule parse_module(const AlgebraPtr& a, const std::string& text,
                         const std::string& origin) {
  try {
    ModuleParser p{a, origin, lex_module(text, origin)};
    if (p.at_end()) p.fail("empty module expression");
    RightModule m = p.expr();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return m;
  } catch (const SpecError& e) {
    std::string w = e.what();
    if (w.rfind(origin, 0) == 0) throw;
    throw SpecError(origin + ": " + w);
  }
}

RightModule load_module(const AlgebraPtr& a, const std::string& path) {
  return parse_module(a, file_text(path), path);
}

Json profile_json(const PropertyProfile& p) {
  Json j;
  j["dim"] = p.dim;
  j["length"] = p.length;
  j["goldie"] = p.goldie;
  j["loewy"] = p.loewy;
  j["top_dim"] = p.top_dim;
  j["factors"] = intmap_json(p.factors);
  j["socle"] = intmap_json(p.socle);
  j["hull_blocks"] = intmap_json(p.hull_blocks);
  j["end_count"] = p.end_count;
  j["hull_end_count"] = p.hull_end_count;
  j["hull_aut_count"] = p.hull_aut_count;
  j["injective"] = flag_name(p.injective);
  j["quasi_injective"] = flag_name(p.quasi_injective);
  j["pseudo_injective"] = flag_name(p.pseudo_injective);
  j["automorphism_invariant"] = flag_name(p.automorphism_invariant);
  j["c1"] = flag_name(p.c1);
  j["c2"] = flag_name(p.c2);
  j["c3"] = flag_name(p.c3);
  j["cs"] = flag_name(p.cs());
  j["continuous"] = flag_name(p.continuous());
  j["quasi_continuous"] = flag_name(p.quasi_continuous());
  j["quasi_projective"] = flag_name(p.quasi_projective);
  j["uniform"] = p.uniform;
  j["uniserial"] = p.uniserial;
  j["local"] = p.local;
  j["indecomposable"] = p.indecomposable;
  j["semisimple"] = p.semisimple;
  j["simple"] = p.simple;
  j["square_free_socle"] = p.square_free_socle;
  Json w = Json::object();
  for (const auto& [k, v] : p.witnesses) w[k] = v;
  j["witnesses"] = w;
  return j;
}

Json verdict_json(const TheoremVerdict& v) {
  Json j;
  j["id"] = v.id;
  j["universe"] = v.universe;
  j["applicable"] = v.applicable;
  j["holds"] = v.holds;
  j["instances_checked"] = v.instances_checked;
  j["witness"] = v.witness;
  j["notes"] = v.notes;
  return j;
}

Json algebra_json(const AlgebraPtr& a) {
  Json j;
  j["field"] = a->field().modulus();
  j["pattern_size"] = a->pattern_size();
  j["dim"] = a->dim();
  j["radical_dim"] = a->radical().dim();
  j["idempotents"] = a->vertices().size();
  j["vertices"] = a->vertices();
  Json labels = Json::array();
  for (const Label& l : a->labels()) labels.push_back(label_name(l));
  j["labels"] = labels;
  j["left_serial"] = is_left_serial(a);
  j["right_serial"] = is_right_serial(a);
  return j;
}

Json census_json(const Census& c, const Caps& caps) {
  Json j;
  j["algebra"] = algebra_json(c.algebra);
  j["bounds"] = intmap_json(c.bounds);
  j["max_length"] = c.max_length;
  j["cogenerator_dim"] = c.cogenerator.dim();
  j["submodules_examined"] = c.submodules_examined;
  j["classes"] = c.representatives.size();
  j["partial"] = c.partial;
  Json rows = Json::array();
  for (const RightModule& m : c.representatives) {
    Json r;
    r["name"] = m.name();
    r["dim"] = m.dim();
    r["length"] = composition_length(m);
    r["goldie"] = goldie_dimension(m);
    r["socle"] = socle_text(socle_factors(m));
    r["injective"] = guarded_flag([&] { return is_injective(m); });
    r["quasi_injective"] =
        guarded_flag([&] { return is_quasi_injective(m).value; });
    r["pseudo_injective"] =
        guarded_flag([&] { return is_pseudo_injective(m, caps).value; });
    r["automorphism_invariant"] =
        guarded_flag([&] { return is_automorphism_invariant(m, caps).value; });
    r["indecomposable"] =
        guarded_flag([&] { return is_indecomposable(m, caps); });
    r["local"] = guarded_flag([&] { return is_local_module(m); });
    r["uniform"] = guarded_flag([&] { return is_uniform(m); });
    rows.push_back(std::move(r));
  }
  j["representatives"] = rows;
  return j;
}

Json Report::to_json() const {
  Json doc;
  doc["tool"] = kToolName;
  doc["schema"] = kSchemaVersion;
  doc["command"] = command;
  doc["body"] = body;
  doc["notices"] = notices;
  doc["timing_ms"] = timing_ms;
  return doc;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << kToolName << "\n";
  os << "command: " << command << "\n";
  render(os, body, 0);
  for (const std::string& n : notices) os << "notice: " << n << "\n";
  os << "timing_ms: " << timing_ms << "\n";
  return os.str();
}

}  // namespace modlab
