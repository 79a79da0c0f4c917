#include "masslin/io.hpp"

#include <json.hpp>
#include <sstream>

namespace masslin {

namespace {

using nlohmann::json;

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + key + '"');
  return *it;
}

Rational rational_field(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(std::string("field \"") + key +
                   "\" must be an integer or a \"p/q\" string");
}

long integer_field(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_number_integer())
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

std::size_t size_field(const json& j, const char* key, long min_value) {
  const long v = integer_field(j, key);
  if (v < min_value)
    throw ParseError(std::string("field \"") + key + "\" must be at least " +
                     std::to_string(min_value));
  return static_cast<std::size_t>(v);
}

IntVector int_vector_field(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_array())
    throw ParseError(std::string("field \"") + key +
                     "\" must be an array of integers");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer())
      throw ParseError(std::string("field \"") + key +
                       "\" must contain only integers");
    out[i] = Integer(v[i].get<long>());
  }
  return out;
}

json rational_json(const Rational& r) { return json(r.str()); }

json rat_vector_json(const RatVector& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(rational_json(v[i]));
  return a;
}

json rat_vector_approx_json(const RatVector& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].to_double());
  return a;
}

json int_vector_json(const IntVector& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].get_str());
  return a;
}

std::string facet_label(const HalfSpaceSystem& sys, std::size_t j) {
  if (j < sys.labels().size() && !sys.labels()[j].empty())
    return sys.labels()[j];
  return "F" + std::to_string(j + 1);
}

}  // namespace

FamilySpec parse_family_json(const std::string& text) {
  const json j = parse_json_text(text);
  if (!j.is_object()) throw ParseError("family spec must be a JSON object");
  const json& name = require_field(j, "family");
  if (!name.is_string())
    throw ParseError("field \"family\" must be a string");
  const std::string family = name.get<std::string>();

  if (family == "delta-p-bundle") {
    DeltaPBundleSpec spec;
    spec.a = int_vector_field(j, "a");
    spec.p = j.contains("p") ? size_field(j, "p", 2) : spec.a.dim();
    if (spec.p != spec.a.dim())
      throw ParseError("bundle spec: \"p\" must equal the length of \"a\"");
    spec.lambda = rational_field(j, "lambda");
    spec.tau = rational_field(j, "tau");
    return spec;
  }
  if (family == "hirzebruch") {
    HirzebruchSpec spec;
    spec.k = integer_field(j, "k");
    if (spec.k < 1) throw ParseError("hirzebruch spec: \"k\" must be positive");
    spec.lambda = rational_field(j, "lambda");
    spec.tau = rational_field(j, "tau");
    return spec;
  }
  if (family == "truncated-simplex") {
    TruncatedSimplexSpec spec;
    spec.n = size_field(j, "n", 2);
    spec.lambda = rational_field(j, "lambda");
    spec.tau = rational_field(j, "tau");
    return spec;
  }
  if (family == "simplex") {
    SimplexSpec spec;
    spec.n = size_field(j, "n", 1);
    spec.tau = rational_field(j, "tau");
    return spec;
  }
  throw ParseError("unknown family \"" + family +
                   "\" (expected delta-p-bundle, hirzebruch, "
                   "truncated-simplex, or simplex)");
}

std::string family_name(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const DeltaPBundleSpec&) const {
      return "delta-p-bundle";
    }
    std::string operator()(const HirzebruchSpec&) const {
      return "hirzebruch";
    }
    std::string operator()(const TruncatedSimplexSpec&) const {
      return "truncated-simplex";
    }
    std::string operator()(const SimplexSpec&) const { return "simplex"; }
  };
  return std::visit(Visitor{}, spec);
}

HalfSpaceSystem build_family(const FamilySpec& spec) {
  struct Visitor {
    HalfSpaceSystem operator()(const DeltaPBundleSpec& s) const {
      return make_delta_p_bundle(s);
    }
    HalfSpaceSystem operator()(const HirzebruchSpec& s) const {
      return make_hirzebruch(s);
    }
    HalfSpaceSystem operator()(const TruncatedSimplexSpec& s) const {
      return make_truncated_simplex(s);
    }
    HalfSpaceSystem operator()(const SimplexSpec& s) const {
      return make_simplex(s.n, s.tau);
    }
  };
  return std::visit(Visitor{}, spec);
}

FamilySpec family_with_parameters(const FamilySpec& spec, const Rational& tau,
                                  const Rational& lambda) {
  FamilySpec out = spec;
  struct Visitor {
    const Rational& tau;
    const Rational& lambda;
    void operator()(DeltaPBundleSpec& s) const {
      s.tau = tau;
      s.lambda = lambda;
    }
    void operator()(HirzebruchSpec& s) const {
      s.tau = tau;
      s.lambda = lambda;
    }
    void operator()(TruncatedSimplexSpec& s) const {
      s.tau = tau;
      s.lambda = lambda;
    }
    void operator()(SimplexSpec& s) const { s.tau = tau; }
  };
  std::visit(Visitor{tau, lambda}, out);
  return out;
}

Rational family_closed_form_invariant(const FamilySpec& spec,
                                      const IntVector& b) {
  struct Visitor {
    const IntVector& b;
    Rational operator()(const DeltaPBundleSpec& s) const {
      return bundle_invariant(s, b);
    }
    Rational operator()(const HirzebruchSpec& s) const {
      return hirzebruch_invariant(s, b);
    }
    Rational operator()(const TruncatedSimplexSpec& s) const {
      return truncated_invariant(s, b);
    }
    Rational operator()(const SimplexSpec& s) const {
      if (b.dim() != s.n)
        throw DimensionError("simplex invariant: b must have length n");
      return Rational(0);
    }
  };
  return std::visit(Visitor{b}, spec);
}

Rational family_closed_form_cm(const FamilySpec& spec, const IntVector& b) {
  struct Visitor {
    const IntVector& b;
    Rational operator()(const DeltaPBundleSpec& s) const {
      return bundle_cm(s, b);
    }
    Rational operator()(const HirzebruchSpec& s) const {
      if (b.dim() != 2)
        throw DimensionError("hirzebruch cm: b must have length 2");
      return dot(b, hirzebruch_cm(s));
    }
    Rational operator()(const TruncatedSimplexSpec& s) const {
      if (b.dim() != s.n)
        throw DimensionError("truncated cm: b must have length n");
      return dot(b, truncated_cm(s));
    }
    Rational operator()(const SimplexSpec& s) const {
      if (b.dim() != s.n)
        throw DimensionError("simplex cm: b must have length n");
      Integer sum(0);
      for (const Integer& bi : b.e) sum += bi;
      return s.tau * Rational(sum) / Rational(static_cast<long>(s.n + 1));
    }
  };
  return std::visit(Visitor{b}, spec);
}

HalfSpaceSystem parse_polytope_json(const std::string& text) {
  const json j = parse_json_text(text);
  if (!j.is_object()) throw ParseError("polytope must be a JSON object");
  const std::size_t n = size_field(j, "n", 1);

  const json& cn = require_field(j, "conormals");
  if (!cn.is_array() || cn.empty())
    throw ParseError("field \"conormals\" must be a non-empty array");
  std::vector<IntVector> conormals;
  conormals.reserve(cn.size());
  for (std::size_t r = 0; r < cn.size(); ++r) {
    const json& row = cn[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError("conormal " + std::to_string(r + 1) +
                       " must be an array of length n");
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!row[i].is_number_integer())
        throw ParseError("conormal entries must be integers");
      v[i] = Integer(row[i].get<long>());
    }
    conormals.push_back(std::move(v));
  }

  const json& off = require_field(j, "offsets");
  if (!off.is_array() || off.size() != conormals.size())
    throw ParseError("field \"offsets\" must match the conormal count");
  RatVector offsets(off.size());
  for (std::size_t r = 0; r < off.size(); ++r) {
    if (off[r].is_string())
      offsets[r] = Rational::parse(off[r].get<std::string>());
    else if (off[r].is_number_integer())
      offsets[r] = Rational(off[r].get<long>());
    else
      throw ParseError("offsets must be integers or \"p/q\" strings");
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& lb = j["labels"];
    if (!lb.is_array() || lb.size() != conormals.size())
      throw ParseError("field \"labels\" must match the conormal count");
    for (const auto& item : lb) {
      if (!item.is_string()) throw ParseError("labels must be strings");
      labels.push_back(item.get<std::string>());
    }
  }

  return HalfSpaceSystem(n, std::move(conormals), std::move(offsets),
                         std::move(labels));
}

std::string polytope_to_json(const HalfSpaceSystem& sys) {
  json j;
  j["n"] = sys.dim();
  json cn = json::array();
  for (const IntVector& v : sys.conormals()) {
    json row = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i)
      row.push_back(v[i].get_si());
    cn.push_back(std::move(row));
  }
  j["conormals"] = std::move(cn);
  json off = json::array();
  for (std::size_t r = 0; r < sys.facet_count(); ++r)
    off.push_back(sys.offset(r).str());
  j["offsets"] = std::move(off);
  if (!sys.labels().empty()) j["labels"] = sys.labels();
  return j.dump(2);
}

IntVector parse_int_vector(const std::string& text) {
  std::vector<Integer> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(',', pos);
    std::string tok = text.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    const auto first = tok.find_first_not_of(" \t");
    if (first == std::string::npos)
      throw ParseError("empty entry in integer vector \"" + text + '"');
    const auto last = tok.find_last_not_of(" \t");
    tok = tok.substr(first, last - first + 1);
    std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size())
      throw ParseError("invalid integer \"" + tok + '"');
    for (; i < tok.size(); ++i)
      if (tok[i] < '0' || tok[i] > '9')
        throw ParseError("invalid integer \"" + tok + '"');
    entries.emplace_back(tok, 10);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  IntVector out(entries.size());
  out.e = std::move(entries);
  return out;
}

std::vector<Rational> GridRange::values() const {
  if (step.sign() <= 0)
    throw ParseError("grid step must be positive");
  std::vector<Rational> out;
  for (Rational t = lo; t <= hi; t += step) out.push_back(t);
  return out;
}

std::vector<GridRange> parse_grid(const std::string& text) {
  std::vector<GridRange> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    const std::string part =
        text.substr(pos, next == std::string::npos ? std::string::npos
                                                   : next - pos);
    if (part.empty())
      throw ParseError("empty grid axis in \"" + text + '"');
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw ParseError("grid axis \"" + part + "\" lacks '='");
    GridRange r;
    r.name = part.substr(0, eq);
    if (r.name != "tau" && r.name != "lambda")
      throw ParseError("unknown grid axis \"" + r.name +
                       "\" (expected tau or lambda)");
    for (const auto& prev : out)
      if (prev.name == r.name)
        throw ParseError("grid axis \"" + r.name + "\" given twice");
    const std::string range = part.substr(eq + 1);
    const std::size_t dots = range.find("..");
    if (dots == std::string::npos)
      throw ParseError("grid range \"" + range + "\" lacks '..'");
    const std::size_t step_kw = range.find("step", dots + 2);
    if (step_kw == std::string::npos)
      throw ParseError("grid range \"" + range + "\" lacks 'step'");
    r.lo = Rational::parse(range.substr(0, dots));
    r.hi = Rational::parse(range.substr(dots + 2, step_kw - dots - 2));
    r.step = Rational::parse(range.substr(step_kw + 4));
    if (r.step.sign() <= 0)
      throw ParseError("grid step must be positive in \"" + part + '"');
    if (r.hi < r.lo)
      throw ParseError("grid range is empty in \"" + part + '"');
    out.push_back(std::move(r));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (out.empty()) throw ParseError("empty grid specification");
  return out;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool decimal) {
  std::ostringstream os;
  const auto emit_cell = [&os](const std::optional<Rational>& v) {
    if (v) os << v->str();
  };
  const auto emit_approx = [&os](const std::optional<Rational>& v) {
    if (v) os << v->to_double();
  };

  if (!rows.empty()) {
    for (const auto& [name, unused] : rows.front().parameters)
      os << name << ',';
    os << "status,cm_dot_b,";
    if (decimal) os << "cm_dot_b_approx,";
    os << "invariant,";
    if (decimal) os << "invariant_approx,";
    os << "closed_form_invariant,";
    if (decimal) os << "closed_form_invariant_approx,";
    os << "match\n";
  }
  for (const SweepRow& row : rows) {
    for (const auto& [unused, value] : row.parameters) os << value << ',';
    os << row.status << ',';
    emit_cell(row.cm_dot_b);
    os << ',';
    if (decimal) {
      emit_approx(row.cm_dot_b);
      os << ',';
    }
    emit_cell(row.invariant);
    os << ',';
    if (decimal) {
      emit_approx(row.invariant);
      os << ',';
    }
    emit_cell(row.closed_form_invariant);
    os << ',';
    if (decimal) {
      emit_approx(row.closed_form_invariant);
      os << ',';
    }
    os << (row.match ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string validation_report_json(const HalfSpaceSystem& sys, bool decimal) {
  const DelzantVerdict verdict = is_delzant(sys);
  json j;
  j["dimension"] = sys.dim();
  j["facet_count"] = sys.facet_count();
  j["simple"] = sys.is_simple();
  j["delzant"] = verdict.ok;
  j["diagnostic"] = verdict.diagnostic;
  json facets = json::array();
  for (std::size_t f = 0; f < sys.facet_count(); ++f) {
    json e;
    e["index"] = f + 1;
    e["label"] = facet_label(sys, f);
    e["conormal"] = int_vector_json(sys.conormal(f));
    e["offset"] = rational_json(sys.offset(f));
    if (decimal) e["offset_approx"] = sys.offset(f).to_double();
    facets.push_back(std::move(e));
  }
  j["facets"] = std::move(facets);
  json vertices = json::array();
  for (const Vertex& v : sys.vertices()) {
    json e;
    e["point"] = rat_vector_json(v.point);
    if (decimal) e["point_approx"] = rat_vector_approx_json(v.point);
    json act = json::array();
    for (const std::size_t a : v.active) act.push_back(a + 1);
    e["active_facets"] = std::move(act);
    vertices.push_back(std::move(e));
  }
  j["vertex_count"] = sys.vertices().size();
  j["vertices"] = std::move(vertices);
  return j.dump(2);
}

std::string invariant_report_json(const HalfSpaceSystem& sys,
                                  const IntVector& b,
                                  const InvariantReport& rep, bool decimal) {
  json j;
  j["dimension"] = sys.dim();
  j["b"] = int_vector_json(b);
  j["cm"] = rat_vector_json(rep.cm);
  j["cm_dot_b"] = rational_json(rep.cm_dot_b);
  if (decimal) {
    j["cm_approx"] = rat_vector_approx_json(rep.cm);
    j["cm_dot_b_approx"] = rep.cm_dot_b.to_double();
  }
  json facets = json::array();
  for (const FacetTerm& t : rep.facet_terms) {
    json e;
    e["index"] = t.facet + 1;
    e["label"] = facet_label(sys, t.facet);
    e["Phi"] = rational_json(t.Phi);
    e["PhiPrime"] = rational_json(t.PhiPrime);
    e["term"] = rational_json(t.term);
    facets.push_back(std::move(e));
  }
  j["facets"] = std::move(facets);
  j["value"] = rational_json(rep.value);
  if (decimal) j["value_approx"] = rep.value.to_double();
  j["infinite_order_flag"] = rep.infinite_order_flag;
  j["interpretation"] =
      rep.infinite_order_flag
          ? "nonzero I certifies infinite order in π₁(Ham)"
          : "I = 0; no infinite-order certificate from this invariant";
  j["formal"] = rep.formal;
  return j.dump(2);
}

std::string linearity_report_json(const HalfSpaceSystem& sys,
                                  const IntVector& b,
                                  const LinearityVerdict& verdict,
                                  bool decimal) {
  json j;
  j["dimension"] = sys.dim();
  j["facet_count"] = sys.facet_count();
  j["b"] = int_vector_json(b);
  j["mass_linear"] = verdict.linear;
  j["grid_size"] = verdict.grid_size;
  if (verdict.coefficients) {
    j["coefficients"] = rat_vector_json(*verdict.coefficients);
    if (decimal)
      j["coefficients_approx"] = rat_vector_approx_json(*verdict.coefficients);
  }
  if (verdict.witness) {
    j["witness_offsets"] = rat_vector_json(*verdict.witness);
    if (decimal)
      j["witness_offsets_approx"] = rat_vector_approx_json(*verdict.witness);
  }
  return j.dump(2);
}

}  // namespace masslin
