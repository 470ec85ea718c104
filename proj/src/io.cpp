#include "assoc/io.hpp"

#include "assoc/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace assoc {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed file: " + what);
}

std::string expect_word(std::istream& in, const std::string& want) {
  std::string word;
  if (!(in >> word) || word != want) malformed("expected '" + want + "'");
  return word;
}

long long expect_count(std::istream& in, const std::string& label) {
  long long n;
  if (!(in >> n) || n < 0) malformed("expected a count after '" + label + "'");
  return n;
}

Rational read_rational(std::istream& in, const std::string& context) {
  std::string tok;
  if (!(in >> tok)) malformed("expected a rational in " + context);
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    malformed(std::string(e.what()) + " in " + context);
  }
}

RationalVector read_vector(std::istream& in, Eigen::Index dim, const std::string& context) {
  RationalVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = read_rational(in, context);
  return v;
}

Rational rational_from_json(const json& j, const std::string& context) {
  if (j.is_number_integer())
    return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      malformed(std::string(e.what()) + " in " + context);
    }
  }
  malformed("value must be an integer or a \"p/q\" string in " + context);
}

std::pair<int, int> pair_key_from_json(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) malformed("pair key must look like \"i,j\": " + key);
  try {
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
  } catch (const std::exception&) {
    malformed("bad pair key: " + key);
  }
}

}  // namespace

void write_point_config(std::ostream& out, const PointConfig2D& config) {
  out << "assoc-pointconfig\n";
  out << "points " << config.size() << "\n";
  for (const RationalVector& p : config.points) out << to_string(p) << "\n";
}

PointConfig2D read_point_config(std::istream& in) {
  expect_word(in, "assoc-pointconfig");
  expect_word(in, "points");
  const long long m = expect_count(in, "points");
  if (m < 3 || m > 100000) malformed("unreasonable point count");
  std::vector<RationalVector> pts;
  for (long long i = 0; i < m; ++i) pts.push_back(read_vector(in, 2, "point list"));
  return make_point_config(pts);
}

void write_polytope(std::ostream& out, const Polytope& p) {
  out << "assoc-polytope\n";
  out << "ambient " << p.ambient_dim << "\n";
  out << "intrinsic " << p.intrinsic_dim << "\n";
  out << "vertices " << p.vertex_count() << "\n";
  for (const RationalVector& v : p.vertices) out << to_string(v) << "\n";
  out << "facets " << p.facet_count() << "\n";
  for (const Facet& f : p.facets) {
    out << "normal " << to_string(f.normal) << " offset " << f.offset << " incident";
    for (int v : f.vertex_indices) out << ' ' << v;
    out << "\n";
  }
  out << "hull-point " << to_string(p.affine_hull.point) << "\n";
  out << "hull-basis " << p.affine_hull.basis.size() << "\n";
  for (const RationalVector& b : p.affine_hull.basis) out << to_string(b) << "\n";
}

Polytope read_polytope(std::istream& in) {
  Polytope p;
  expect_word(in, "assoc-polytope");
  expect_word(in, "ambient");
  p.ambient_dim = static_cast<int>(expect_count(in, "ambient"));
  if (p.ambient_dim < 1 || p.ambient_dim > 64) malformed("unreasonable ambient dimension");
  expect_word(in, "intrinsic");
  long long intrinsic;
  if (!(in >> intrinsic)) malformed("expected intrinsic dimension");
  p.intrinsic_dim = static_cast<int>(intrinsic);
  expect_word(in, "vertices");
  const long long nv = expect_count(in, "vertices");
  if (nv < 1 || nv > 1000000) malformed("unreasonable vertex count");
  for (long long i = 0; i < nv; ++i)
    p.vertices.push_back(read_vector(in, p.ambient_dim, "vertex list"));
  expect_word(in, "facets");
  const long long nf = expect_count(in, "facets");
  if (nf < 0 || nf > 1000000) malformed("unreasonable facet count");
  for (long long i = 0; i < nf; ++i) {
    Facet f;
    expect_word(in, "normal");
    f.normal = read_vector(in, p.ambient_dim, "facet normal");
    expect_word(in, "offset");
    f.offset = read_rational(in, "facet offset");
    expect_word(in, "incident");
    // Incidence indices run to the end of the line.
    std::string rest;
    std::getline(in, rest);
    std::istringstream line(rest);
    long long idx;
    while (line >> idx) {
      if (idx < 0 || idx >= nv) malformed("facet incidence index out of range");
      f.vertex_indices.push_back(static_cast<int>(idx));
    }
    if (!std::is_sorted(f.vertex_indices.begin(), f.vertex_indices.end()))
      malformed("facet incidence list not sorted");
    p.facets.push_back(std::move(f));
  }
  expect_word(in, "hull-point");
  p.affine_hull.point = read_vector(in, p.ambient_dim, "hull point");
  expect_word(in, "hull-basis");
  const long long nb = expect_count(in, "hull-basis");
  if (nb < 0 || nb > p.ambient_dim) malformed("unreasonable hull basis size");
  for (long long i = 0; i < nb; ++i)
    p.affine_hull.basis.push_back(read_vector(in, p.ambient_dim, "hull basis"));

  // Structural re-validation: the loaded object must satisfy the Polytope
  // invariants exactly.
  if (affine_dimension(p.vertices) != p.intrinsic_dim)
    malformed("intrinsic dimension does not match the vertex set");
  if (static_cast<long long>(p.affine_hull.basis.size()) != std::max<long long>(p.intrinsic_dim, 0))
    malformed("hull basis size does not match intrinsic dimension");
  for (const Facet& f : p.facets) {
    std::vector<char> incident(p.vertices.size(), 0);
    for (int v : f.vertex_indices) incident[v] = 1;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
      const Rational s = f.normal.dot(p.vertices[v]) - f.offset;
      if (s > 0) malformed("facet inequality violated by a vertex");
      if ((s == 0) != static_cast<bool>(incident[v]))
        malformed("facet incidence list does not match equality set");
    }
    std::vector<RationalVector> on_facet;
    for (int v : f.vertex_indices) on_facet.push_back(p.vertices[v]);
    if (!on_facet.empty() && affine_dimension(on_facet) != p.intrinsic_dim - 1)
      malformed("facet incidence does not span dimension intrinsic-1");
  }
  return p;
}

ClusterParams read_cluster_params(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    malformed(std::string("json parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    malformed("cluster params need an integer field \"n\"");
  ClusterParams p;
  p.n = j["n"].get<int>();
  if (!j.contains("f") || !j["f"].is_object()) malformed("cluster params need an object \"f\"");
  for (const auto& [key, value] : j["f"].items())
    p.f[pair_key_from_json(key)] = rational_from_json(value, "f[" + key + "]");
  return p;
}

MinkowskiParams read_minkowski_params(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    malformed(std::string("json parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    malformed("minkowski params need an integer field \"n\"");
  MinkowskiParams p;
  p.n = j["n"].get<int>();
  if (!j.contains("alpha") || !j["alpha"].is_object())
    malformed("minkowski params need an object \"alpha\"");
  const json& alpha = j["alpha"];
  if (alpha.contains("all")) {
    if (alpha.size() != 1) malformed("alpha \"all\" cannot be mixed with explicit intervals");
    const Rational w = rational_from_json(alpha["all"], "alpha.all");
    for (int i = 1; i <= p.n + 1; ++i)
      for (int jj = i + 1; jj <= p.n + 1; ++jj) p.alpha[{i, jj}] = w;
    return p;
  }
  for (const auto& [key, value] : alpha.items())
    p.alpha[pair_key_from_json(key)] = rational_from_json(value, "alpha[" + key + "]");
  return p;
}

bool ExperimentReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string to_text(const ExperimentReport& report) {
  std::ostringstream out;
  out << "assoc-report\n";
  out << "command " << report.command << "\n";
  for (const auto& [k, v] : report.inputs) out << "input " << k << " " << v << "\n";
  for (const auto& [k, v] : report.results) out << "result " << k << " " << v << "\n";
  for (const auto& c : report.checks)
    out << "check " << c.name << " " << (c.pass ? "pass" : "FAIL")
        << (c.detail.empty() ? "" : " " + c.detail) << "\n";
  out << "status " << (report.all_checks_pass() ? "ok" : "failed") << "\n";
  return out.str();
}

}  // namespace assoc
