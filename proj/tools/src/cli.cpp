// Copyright 2026 The Tuttice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tuttice/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "tuttice/activity.hpp"
#include "tuttice/corpus.hpp"
#include "tuttice/error.hpp"
#include "tuttice/io.hpp"
#include "tuttice/lattice.hpp"
#include "tuttice/qpoly.hpp"
#include "tuttice/subdivision.hpp"
#include "tuttice/tutte.hpp"
#include "tuttice/verify.hpp"

namespace tuttice::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string input_file;
  std::string inline_json;
  std::optional<int> t;
  std::optional<int> u;
  std::string order;          // --order: integer or natural|reversed
  std::string element_order;  // natural | reversed | "3,1,2"
  std::optional<int> series_order;
  std::string format = "json";
  std::string level = "quick";
  std::string corpus;
  std::string method = "qprime";
};

// Output of one subcommand in both renderings.
struct Result {
  Json json;
  std::string pretty;
  int exit_code = kOk;
};

std::optional<int> parse_int(const std::string& s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Splits the overloaded --order flag into element and series orders.
void resolve_order(Options& o) {
  if (o.order.empty()) return;
  if (const auto n = parse_int(o.order)) {
    if (o.series_order && *o.series_order != *n) {
      throw UsageError("--order and --series-order disagree");
    }
    o.series_order = *n;
  } else {
    if (!o.element_order.empty() && o.element_order != o.order) {
      throw UsageError("--order and --element-order disagree");
    }
    o.element_order = o.order;
  }
}

ElementOrder element_order(const Options& o, int n) {
  if (o.element_order.empty() || o.element_order == "natural") {
    return ElementOrder::natural(n);
  }
  if (o.element_order == "reversed") return ElementOrder::reversed(n);
  std::vector<int> seq;
  std::stringstream ss(o.element_order);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto label = parse_int(item);
    if (!label || *label < 1 || *label > n) {
      throw UsageError("bad element order '" + o.element_order + "'");
    }
    seq.push_back(*label - 1);
  }
  try {
    return ElementOrder::from_sequence(std::move(seq));
  } catch (const Error& e) {
    throw UsageError("bad element order '" + o.element_order + "': " + e.message());
  }
}

Polymatroid load(const Options& o, std::istream& in) {
  if (!o.input_file.empty() && !o.inline_json.empty()) {
    throw UsageError("give either -i or --json, not both");
  }
  std::string text;
  if (!o.inline_json.empty()) {
    text = o.inline_json;
  } else if (!o.input_file.empty() && o.input_file != "-") {
    std::ifstream file(o.input_file);
    if (!file) {
      throw Error(ErrorCode::kMalformedInput, "cannot read '" + o.input_file + "'");
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_polymatroid(text);
}

Json labels(Subset s) { return Json(labels_of(s)); }

std::string set_text(Subset s, int n) { return "{" + subset_key(s, n) + "}"; }

std::string vector_text(std::span<const int> v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

Json poly_json(const BivarPoly& p) { return Json::parse(polynomial_to_json(p)); }

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() &&
      c <= std::numeric_limits<long long>::max()) {
    return c.convert_to<long long>();
  }
  return c.str();
}

// "binom(t,2) + 2tu + binom(u,2) + 3t + 3u + 2".
std::string binomial_pretty(const BinomialForm& form) {
  const auto basis = [](const char* var, int k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return var;
    return "binom(" + std::string(var) + "," + std::to_string(k) + ")";
  };
  std::string out;
  const auto& coeffs = form.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const Integer& c = it->second;
    const Integer mag = c < 0 ? Integer(-c) : c;
    std::vector<std::string> factors;
    const std::string tb = basis("t", it->first.i);
    const std::string ub = basis("u", it->first.j);
    if (mag != 1 || (tb.empty() && ub.empty())) factors.push_back(mag.str());
    if (!tb.empty()) factors.push_back(tb);
    if (!ub.empty()) factors.push_back(ub);
    const bool compact = tb.size() <= 1 && ub.size() <= 1;
    std::string term;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k && !compact) term += "*";
      term += factors[k];
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

Json face_json(const TopDegreeFace& f) {
  Json j;
  j["X"] = labels(f.partition.x);
  j["Y"] = labels(f.partition.y);
  j["B"] = labels(f.basis);
  j["vertex"] = f.vertex;
  j["i"] = f.i;
  j["j"] = f.j;
  return j;
}

std::string face_pretty(const TopDegreeFace& f, int n) {
  return "X=" + set_text(f.partition.x, n) + " Y=" + set_text(f.partition.y, n) +
         " B=" + set_text(f.basis, n) + " (i,j)=(" + std::to_string(f.i) + "," +
         std::to_string(f.j) + ")";
}

void require_matroid(const Polymatroid& m, const std::string& what) {
  if (!m.is_matroid()) {
    throw Error(ErrorCode::kNotAMatroid, what + " requires a matroid");
  }
}

Result cmd_bases(const Polymatroid& m) {
  const std::vector<BaseVector> bases = enumerate_bases(m);
  Result r;
  r.json["n"] = m.size();
  r.json["rank"] = m.rank();
  r.json["count"] = bases.size();
  r.json["bases"] = bases;
  for (const BaseVector& b : bases) r.pretty += vector_text(b) + "\n";
  return r;
}

Result cmd_count(const Polymatroid& m, const Options& o) {
  const int t = o.t.value_or(0);
  const int u = o.u.value_or(0);
  if (t < 0 || u < 0) throw UsageError("--t and --u must be nonnegative");
  const Count c = count_lattice_points(m, t, u);
  Result r;
  r.json["t"] = t;
  r.json["u"] = u;
  r.json["count"] = c;
  r.pretty = std::to_string(c) + "\n";
  return r;
}

Result cmd_grid(const Polymatroid& m, const Options& o) {
  const int t_max = o.t.value_or(m.size() - 1);
  const int u_max = o.u.value_or(m.size() - 1);
  if (t_max < 0 || u_max < 0) throw UsageError("--t and --u must be nonnegative");
  const auto rows = count_grid(m, t_max, u_max).rows();
  Result r;
  r.json["t_max"] = t_max;
  r.json["u_max"] = u_max;
  r.json["grid"] = rows;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      r.pretty += (k ? " " : "") + std::to_string(row[k]);
    }
    r.pretty += "\n";
  }
  return r;
}

Result cmd_qpoly(const Polymatroid& m) {
  const BinomialForm form = binomial_form(m);
  Result r;
  r.json["pretty"] = binomial_pretty(form);
  Json terms = Json::array();
  const auto& coeffs = form.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    terms.push_back({{"i", it->first.i}, {"j", it->first.j},
                     {"c", integer_json(it->second)}});
  }
  r.json["binomial"] = {{"basis", "binom(t,i) binom(u,j)"}, {"terms", terms}};
  r.pretty = binomial_pretty(form) + "\n";
  return r;
}

Result cmd_qprime(const Polymatroid& m) {
  const BivarPoly q = qprime(m);
  Result r;
  r.json["pretty"] = to_pretty(q);
  r.json["polynomial"] = poly_json(q);
  r.pretty = to_pretty(q) + "\n";
  return r;
}

Result cmd_tutte(const Polymatroid& m, const Options& o) {
  require_matroid(m, "the Tutte polynomial");
  BivarPoly t;
  if (o.method == "qprime") {
    t = tutte_from_qprime(m.size(), m.rank(), qprime(m));
  } else if (o.method == "corank") {
    t = tutte_corank_nullity(m);
  } else if (o.method == "activity") {
    t = tutte_from_activities(m, element_order(o, m.size()));
  } else {
    throw UsageError("unknown method '" + o.method + "'");
  }
  Result r;
  r.json["method"] = o.method;
  r.json["pretty"] = to_pretty(t);
  r.json["polynomial"] = poly_json(t);
  r.pretty = to_pretty(t) + "\n";
  return r;
}

Json univariate_json(const BivarPoly& p, const char* var) {
  std::vector<Json> coeffs(static_cast<std::size_t>(std::max(p.degree_x() + 1, 0)), 0);
  for (const auto& [e, c] : p.terms()) coeffs[e.i] = integer_json(c);
  return {{"pretty", to_pretty(p, var, "y")}, {"coefficients", coeffs}};
}

Json order_json(const ElementOrder& order) {
  Json seq = Json::array();
  for (int e : order.sequence()) seq.push_back(e + 1);
  return seq;
}

Result cmd_activity(const Polymatroid& m, const Options& o) {
  const int n = m.size();
  const ElementOrder order = element_order(o, n);
  Result r;
  r.json["order"] = order_json(order);
  Json records = Json::array();
  for (const ActivityRecord& a : activity_records(m, order)) {
    records.push_back({{"base", a.base},
                       {"internal_active", labels(a.internal_active)},
                       {"external_active", labels(a.external_active)},
                       {"internal_inactive", a.internal_inactive},
                       {"external_inactive", a.external_inactive}});
    r.pretty += vector_text(a.base) + "  Int=" + set_text(a.internal_active, n) +
                " Ext=" + set_text(a.external_active, n) + "  inactive=(" +
                std::to_string(a.internal_inactive) + "," +
                std::to_string(a.external_inactive) + ")\n";
  }
  r.json["records"] = std::move(records);
  const BivarPoly ip = internal_polynomial(m, order);
  const BivarPoly ep = external_polynomial(m, order);
  r.json["internal_polynomial"] = univariate_json(ip, "xi");
  r.json["external_polynomial"] = univariate_json(ep, "eta");
  r.pretty += "I(xi) = " + to_pretty(ip, "xi", "y") + "\n";
  r.pretty += "X(eta) = " + to_pretty(ep, "eta", "y") + "\n";
  return r;
}

Result cmd_dawson(const Polymatroid& m, const Options& o) {
  require_matroid(m, "a Dawson partition");
  const int n = m.size();
  const ElementOrder order = element_order(o, n);
  const std::vector<DawsonInterval> intervals = dawson_partition(m, order);
  const DawsonValidation v = validate_dawson_partition(intervals, n);
  Result r;
  r.json["order"] = order_json(order);
  Json list = Json::array();
  for (const DawsonInterval& iv : intervals) {
    list.push_back({{"basis", labels(iv.basis)},
                    {"lower", labels(iv.lower)},
                    {"upper", labels(iv.upper)}});
    r.pretty += "B=" + set_text(iv.basis, n) + ": [" + set_text(iv.lower, n) +
                ", " + set_text(iv.upper, n) + "]\n";
  }
  r.json["intervals"] = std::move(list);
  r.json["valid"] = v.ok();
  if (!v.ok()) r.json["witness"] = v.witness;
  r.pretty += std::string("valid: ") + (v.ok() ? "yes" : "no (" + v.witness + ")") + "\n";
  return r;
}

std::vector<TopDegreeFace> faces_under(const Polymatroid& m, const Options& o) {
  require_matroid(m, "top degree faces");
  const int n = m.size();
  if (o.element_order.empty() || o.element_order == "natural") {
    return top_degree_faces(m);
  }
  const ElementOrder order = element_order(o, n);
  std::vector<TopDegreeFace> faces;
  for (const OrderedPartition& p : ordered_partitions(n)) {
    TopDegreeFace f;
    f.partition = p;
    f.basis = top_degree_basis(m, p, order);
    f.vertex.assign(n, 0);
    for (int e : elements_of(f.basis)) f.vertex[e] = 1;
    f.i = cardinality(p.x) - 1;
    f.j = cardinality(p.y) - 1;
    faces.push_back(std::move(f));
  }
  return faces;
}

Result cmd_topdeg(const Polymatroid& m, const Options& o) {
  const std::vector<TopDegreeFace> faces = faces_under(m, o);
  Result r;
  r.json["count"] = faces.size();
  Json list = Json::array();
  for (const TopDegreeFace& f : faces) {
    list.push_back(face_json(f));
    r.pretty += face_pretty(f, m.size()) + "\n";
  }
  r.json["faces"] = std::move(list);
  return r;
}

Result cmd_poset(const Polymatroid& m) {
  const int n = m.size();
  const FacePoset poset = face_poset(m);
  const CoefficientReport coeffs = coefficient_check(m);
  Result r;
  Json faces = Json::array();
  for (const TopDegreeFace& f : poset.faces) faces.push_back(face_json(f));
  r.json["faces"] = std::move(faces);
  Json elements = Json::array();
  for (const PosetElement& e : poset.elements) {
    elements.push_back({{"B", labels(e.basis)},
                        {"lower", labels(e.lower)},
                        {"upper", labels(e.upper)},
                        {"i", e.i},
                        {"j", e.j},
                        {"cube", e.cube}});
  }
  r.json["elements"] = std::move(elements);
  Json cubes = Json::array();
  for (const Cube& c : poset.cubes) {
    cubes.push_back({{"basis", labels(c.interval.basis)},
                     {"lower", labels(c.interval.lower)},
                     {"upper", labels(c.interval.upper)},
                     {"dimension", c.dimension},
                     {"faces", c.vertices}});
    r.pretty += "cube B=" + set_text(c.interval.basis, n) + " [" +
                set_text(c.interval.lower, n) + ", " +
                set_text(c.interval.upper, n) + "] dim " +
                std::to_string(c.dimension) + ", " +
                std::to_string(c.vertices.size()) + " top degree faces\n";
  }
  r.json["cubes"] = std::move(cubes);
  r.json["cubes_match_dawson"] = poset.cubes_match_dawson;
  if (!poset.cubes_match_dawson) r.json["witness"] = poset.witness;
  Json entries = Json::array();
  for (const CoefficientEntry& e : coeffs.entries) {
    entries.push_back({{"monomial", {{"i", e.i}, {"j", e.j}}},
                       {"cells", e.poset_count},
                       {"coefficient", integer_json(e.coefficient)},
                       {"matches", e.matches}});
    r.pretty += "x^" + std::to_string(e.i) + " y^" + std::to_string(e.j) + ": " +
                std::to_string(e.poset_count) + " cells, coefficient " +
                e.coefficient.str() + (e.matches ? "" : "  MISMATCH") + "\n";
  }
  r.json["coefficient_check"] = {{"ok", coeffs.ok()}, {"entries", entries}};
  r.pretty += std::to_string(poset.elements.size()) + " poset elements; " +
              (poset.cubes_match_dawson ? "cubes match Dawson intervals"
                                        : "cube mismatch: " + poset.witness) +
              "\n";
  return r;
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  if (o.level == "quick") {
    v.level = VerifyLevel::kQuick;
  } else if (o.level == "full") {
    v.level = VerifyLevel::kFull;
  } else {
    throw UsageError("--level must be quick or full");
  }
  v.series_order = o.series_order.value_or(6);
  if (v.series_order < 0) throw UsageError("series order must be nonnegative");
  return v;
}

Json report_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json j{{"name", c.name}, {"statement", c.statement},
           {"status", status_name(c.status)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return checks;
}

Result cmd_verify(const Polymatroid& m, const Options& o) {
  const VerifyOptions v = verify_options(o);
  const VerificationReport report = verify(m, v);
  Result r;
  r.json["level"] = o.level;
  r.json["series_order"] = v.series_order;
  r.json["matroid"] = m.is_matroid();
  r.json["status"] = report.passed() ? "pass" : "fail";
  r.json["checks"] = report_json(report);
  for (const CheckResult& c : report.checks) {
    r.pretty += std::string("[") + status_name(c.status) + "] " + c.name + ": " +
                c.statement + (c.detail.empty() ? "" : " -- " + c.detail) + "\n";
  }
  r.pretty += std::string("overall: ") + (report.passed() ? "pass" : "fail") + "\n";
  r.exit_code = report.passed() ? kOk : kVerificationFailed;
  return r;
}

std::vector<NamedPolymatroid> named_corpus(const std::string& name) {
  std::vector<NamedPolymatroid> examples;
  examples.push_back({"small-example", small_example()});
  examples.push_back({"doubled-small-example", doubled_small_example()});
  const auto append = [](std::vector<NamedPolymatroid>& to,
                         std::vector<NamedPolymatroid> from) {
    for (auto& e : from) to.push_back(std::move(e));
  };
  std::vector<NamedPolymatroid> out;
  if (name == "default") {
    out = uniform_corpus();
    append(out, graphic_corpus());
    append(out, std::move(examples));
  } else if (name == "uniform") {
    out = uniform_corpus();
  } else if (name == "graphic") {
    out = graphic_corpus();
  } else if (name == "random") {
    out = random_matroid_corpus();
  } else if (name == "examples") {
    out = std::move(examples);
  } else if (name == "all") {
    out = matroid_corpus();
    append(out, std::move(examples));
  } else {
    throw UsageError("unknown corpus '" + name +
                     "' (default|uniform|graphic|random|examples|all)");
  }
  return out;
}

Result cmd_verify_corpus(const Options& o) {
  const VerifyOptions v = verify_options(o);
  Result r;
  r.json["corpus"] = o.corpus;
  r.json["level"] = o.level;
  r.json["series_order"] = v.series_order;
  Json members = Json::array();
  bool all_passed = true;
  for (const NamedPolymatroid& entry : named_corpus(o.corpus)) {
    const VerificationReport report = verify(entry.m, v);
    Json failed = Json::array();
    for (const CheckResult& c : report.checks) {
      if (c.status == CheckStatus::kFail) failed.push_back(c.name);
    }
    all_passed = all_passed && report.passed();
    members.push_back({{"name", entry.name},
                       {"status", report.passed() ? "pass" : "fail"},
                       {"failed", failed}});
    r.pretty += std::string(report.passed() ? "[pass] " : "[fail] ") + entry.name +
                (failed.empty() ? "" : " " + failed.dump()) + "\n";
  }
  r.json["status"] = all_passed ? "pass" : "fail";
  r.json["members"] = std::move(members);
  r.pretty += std::string("overall: ") + (all_passed ? "pass" : "fail") + "\n";
  r.exit_code = all_passed ? kOk : kVerificationFailed;
  return r;
}

Result dispatch(Options& o, std::istream& in) {
  resolve_order(o);
  if (o.format != "json" && o.format != "pretty") {
    throw UsageError("--format must be json or pretty");
  }
  if (o.command == "verify" && !o.corpus.empty()) return cmd_verify_corpus(o);
  if (!o.corpus.empty()) throw UsageError("--corpus only applies to verify");
  const Polymatroid m = load(o, in);
  if (o.command == "bases") return cmd_bases(m);
  if (o.command == "count") return cmd_count(m, o);
  if (o.command == "grid") return cmd_grid(m, o);
  if (o.command == "qpoly") return cmd_qpoly(m);
  if (o.command == "qprime") return cmd_qprime(m);
  if (o.command == "tutte") return cmd_tutte(m, o);
  if (o.command == "activity") return cmd_activity(m, o);
  if (o.command == "dawson") return cmd_dawson(m, o);
  if (o.command == "topdeg") return cmd_topdeg(m, o);
  if (o.command == "poset") return cmd_poset(m);
  return cmd_verify(m, o);
}

void report_error(std::ostream& err, std::string_view name,
                  const std::string& message) {
  err << Json{{"error", name}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lattice-point counting polynomials and Tutte polynomials of "
               "polymatroids",
               "tuttice"};
  app.require_subcommand(1);
  app.add_option("-i,--input", o.input_file, "Polymatroid JSON file ('-' for stdin)");
  app.add_option("--json", o.inline_json, "Inline polymatroid JSON");
  app.add_option("--t", o.t, "Number of reflected simplices t (grid: t_max)");
  app.add_option("--u", o.u, "Number of simplices u (grid: u_max)");
  app.add_option("--order", o.order,
                 "Element order (natural|reversed|comma list) or series order (integer)");
  app.add_option("--element-order", o.element_order,
                 "Element order: natural, reversed, or labels smallest first, e.g. 3,1,2");
  app.add_option("--series-order", o.series_order, "Series truncation order (default 6)");
  app.add_option("--format", o.format, "Output format: json or pretty");
  app.add_option("--level", o.level, "Verification level: quick or full");
  app.add_option("--corpus", o.corpus,
                 "verify a built-in corpus: default|uniform|graphic|random|examples|all");
  app.add_option("--method", o.method, "tutte: qprime (default), corank or activity");

  const std::pair<const char*, const char*> commands[] = {
      {"bases", "List the integer bases"},
      {"count", "Count lattice points of P(M) + u simplex + t reflected simplex"},
      {"grid", "Count grid Q(t,u) for 0 <= t <= t_max, 0 <= u <= u_max"},
      {"qpoly", "Q(t,u) in the binomial basis"},
      {"qprime", "Q'(x,y)"},
      {"tutte", "Tutte polynomial (matroids)"},
      {"activity", "Base activities and the internal/external polynomials"},
      {"dawson", "Dawson partition of the power set (matroids)"},
      {"topdeg", "Top degree faces of the mixed subdivision (matroids)"},
      {"poset", "Face poset, cube decomposition and coefficient check (matroids)"},
      {"verify", "Run the verification suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&o, name = std::string(name)] { o.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kInputError;
  }

  try {
    Result r = dispatch(o, in);
    if (o.format == "pretty") {
      out << r.pretty;
    } else {
      out << r.json.dump(2) << "\n";
    }
    return r.exit_code;
  } catch (const UsageError& e) {
    report_error(err, "UsageError", e.what());
  } catch (const Error& e) {
    report_error(err, error_name(e.code()), e.message());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
  }
  return kInputError;
}

}  // namespace tuttice::cli
