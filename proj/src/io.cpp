#include "planarop/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "planarop/error.hpp"

namespace planarop {

namespace {

constexpr int kSchemaVersion = 1;

json complex_array(std::span<const GaussianRational> c) {
  json out = json::array();
  for (const auto& z : c) out.push_back(to_json(z));
  return out;
}

json value_json(const CheckValue& v) {
  json j{{"k", v.k}, {"value", to_json(v.value)}, {"expected", to_json(v.expected)}};
  if (v.m) j["m"] = *v.m;
  return j;
}

}  // namespace

std::string complex_string(const GaussianRational& z) { return z.to_string(); }

GaussianRational parse_complex_string(const std::string& text) {
  auto bad = [&] { return Error(Errc::invalid_input, "malformed complex literal '" + text + "'"); };
  if (text.size() < 2 || text.back() != 'i') throw bad();
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = text.find_last_of("+-", text.size() - 2);
  if (split == std::string::npos || split == 0) throw bad();
  std::string im = text.substr(split, text.size() - 1 - split);
  if (im[0] == '+') im.erase(0, 1);
  return {parse_rational(text.substr(0, split)), parse_rational(im)};
}

json to_json(const GaussianRational& z) {
  return {{"re", rational_to_string(z.re())}, {"im", rational_to_string(z.im())}};
}

GaussianRational gaussian_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_string() || !j["im"].is_string())
    throw Error(Errc::invalid_input, "complex value must be {\"re\": \"p/q\", \"im\": \"r/s\"}");
  return {parse_rational(j["re"].get<std::string>()), parse_rational(j["im"].get<std::string>())};
}

std::string float_string(const BigFloat& x) { return x.to_string(17); }

json to_json(const WeightSpec& w) {
  json nodes = json::array();
  for (const auto& n : w.nodes())
    nodes.push_back({{"re", rational_to_string(n.a.re())}, {"im", rational_to_string(n.a.im())}, {"c", n.c}});
  return {{"nodes", nodes}};
}

json to_json(const CPoly& p) { return complex_array(p.coeffs()); }

json to_json(const LaurentPoly& p) { return {{"min_deg", p.min_deg()}, {"coeffs", complex_array(p.coeffs())}}; }

json to_json(const ExpRational& f) {
  json terms = json::array();
  for (const auto& [freq, num] : f.terms())
    terms.push_back({{"freq", to_json(freq)}, {"min_deg", num.min_deg()}, {"coeffs", complex_array(num.coeffs())}});
  return {{"den", to_json(f.den())}, {"terms", terms}};
}

json to_json(const GramMatrix& g) {
  json rows = json::array();
  for (unsigned j = 0; j <= g.n(); ++j) {
    json row = json::array();
    for (unsigned k = 0; k <= g.n(); ++k) row.push_back(to_json(g(j, k)));
    rows.push_back(row);
  }
  return {{"n", g.n()}, {"entries", rows}};
}

json to_json(const MonicOP& op) { return {{"n", op.n}, {"coeffs", to_json(op.P)}}; }

json to_json(const TypeISolution& sol) {
  json qs = json::array();
  for (const auto& q : sol.Qs) qs.push_back(to_json(q));
  return {{"n", sol.n}, {"P", to_json(sol.P)}, {"Q", qs}};
}

json to_json(const CheckReport& r) {
  json values = json::array();
  for (const auto& v : r.values) values.push_back(value_json(v));
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(value_json(v));
  json diag = json::object();
  for (const auto& [key, v] : r.diagnostics) diag[key] = to_json(v);
  return {{"check", r.check}, {"pass", r.pass},     {"values", values},
          {"violations", violations}, {"diagnostics", diag}, {"note", r.note}};
}

json to_json(const MultiIndex& idx) { return idx.parts; }

json to_json(const YMatrix& y) {
  auto matrix = [](const ExpMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& e : row) r.push_back(to_json(e));
      rows.push_back(r);
    }
    return rows;
  };
  return {{"exponents", y.exponents}, {"outside", matrix(y.outside)}, {"inside", matrix(y.inside)}};
}

json to_json(const RHReport& r) {
  return {{"family", r.family},
          {"pass", r.pass()},
          {"checks",
           {{"jump_unimodular", r.jump_unimodular},
            {"exponents_balanced", r.exponents_balanced},
            {"jump_exact", r.jump_exact},
            {"jump_numeric", r.jump_numeric},
            {"analytic_inside", r.analytic_inside},
            {"asymptotics", r.asymptotics},
            {"determinant", r.determinant}}},
          {"worst_residual", r.worst_residual},
          {"offending", r.offending}};
}

json to_json(const ZeroSet& z) {
  json zeros = json::array();
  for (std::size_t i = 0; i < z.zeros.size(); ++i)
    zeros.push_back({{"re", float_string(z.zeros[i].re())},
                     {"im", float_string(z.zeros[i].im())},
                     {"residual", float_string(z.residuals[i])}});
  return {{"degree", z.degree}, {"zeros", zeros}, {"iterations", z.iterations}, {"converged", z.converged}};
}

std::string zeros_csv(const ZeroSet& z) {
  std::ostringstream out;
  out << "re,im,residual\n";
  for (std::size_t i = 0; i < z.zeros.size(); ++i)
    out << float_string(z.zeros[i].re()) << ',' << float_string(z.zeros[i].im()) << ','
        << float_string(z.residuals[i]) << '\n';
  return out.str();
}

WeightSpec weight_from_json(const json& doc) {
  auto bad = [](const std::string& why) { return Error(Errc::invalid_input, "weight file: " + why); };
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) throw bad("expected {\"nodes\": [...]}");
  std::vector<Node> nodes;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_object()) throw bad("node must be an object");
    auto text = [&](const char* key) -> std::string {
      if (!n.contains(key)) return "0";
      if (n[key].is_string()) return n[key].get<std::string>();
      if (n[key].is_number_integer()) return std::to_string(n[key].get<long long>());
      throw bad(std::string("field '") + key + "' must be a rational string");
    };
    if (!n.contains("c") || !n["c"].is_number_integer()) throw bad("node needs an integer multiplicity 'c'");
    const long long c = n["c"].get<long long>();
    if (c < 1) throw Error(Errc::invalid_weight, "multiplicity must be >= 1");
    nodes.push_back(Node{GaussianRational(parse_rational(text("re")), parse_rational(text("im"))),
                         static_cast<unsigned>(c)});
  }
  return WeightSpec(std::move(nodes));
}

WeightSpec load_weight_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot read " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_input, path.string() + ": " + e.what());
  }
  return weight_from_json(doc);
}

mpfr_prec_t default_precision() {
  if (const char* env = std::getenv("PLANAROP_PREC")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64) return static_cast<mpfr_prec_t>(v);
  }
  return 256;
}

void RunConfig::validate() const {
  if (precision_bits < 64) throw Error(Errc::invalid_input, "precision must be at least 64 bits");
  if (format != "json" && format != "csv") throw Error(Errc::invalid_input, "format must be json or csv");
}

json with_schema(json body, const std::string& kind) {
  body["schema"] = "planarop." + kind + "/" + std::to_string(kSchemaVersion);
  return body;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::io_error, "write failed for " + path);
}

}  // namespace planarop
