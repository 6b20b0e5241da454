#include "tverberg/io.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line, split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      std::istringstream s(line);
      tokens.assign(std::istream_iterator<std::string>(s), std::istream_iterator<std::string>());
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return number_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(number_, what); }

  long integer(const std::string& token, long min, long max) const {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail("expected an integer, got '" + token + "'");
    if (value < min || value > max) fail("value " + token + " out of range");
    return value;
  }

  Rational rational(const std::string& token) const {
    try {
      return parse_rational(token);
    } catch (const std::exception&) {
      fail("malformed rational '" + token + "'");
    }
  }

  void header(std::vector<std::string>& tokens, const std::string& magic, std::size_t fields) {
    if (!next(tokens)) fail("missing '" + magic + " v1' header");
    if (tokens[0] != magic || tokens.size() < 2 || tokens[1] != "v1" || tokens.size() != fields) {
      fail("expected '" + magic + " v1' header with " + std::to_string(fields - 2) + " field(s)");
    }
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

constexpr long kMaxLabel = 1L << 30;

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::kCyclic:
      return "cyclic";
    case GroupKind::kSymmetric:
      return "symmetric";
    case GroupKind::kSymmetricProduct:
      return "symmetric-product";
  }
  return "cyclic";
}

GroupKind parse_kind(const std::string& s) {
  if (s == "cyclic") return GroupKind::kCyclic;
  if (s == "symmetric") return GroupKind::kSymmetric;
  if (s == "symmetric-product") return GroupKind::kSymmetricProduct;
  throw std::invalid_argument("unknown group kind '" + s + "'");
}

Json integer_json(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

ComplexFile complex_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  try {
    int n = j.at("vertex_count").get<int>();
    if (n < 0) throw std::invalid_argument("negative vertex_count");
    std::vector<Simplex> facets;
    for (const auto& f : j.at("facets")) {
      auto vs = f.get<std::vector<Vertex>>();
      for (Vertex v : vs) {
        if (v < 0 || v >= n) throw std::invalid_argument("facet vertex out of range");
      }
      facets.emplace_back(std::move(vs));
    }
    std::vector<VertexLabel> labels;
    if (j.contains("labels")) {
      for (const auto& l : j["labels"]) labels.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
      if (labels.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("labels do not match vertex_count");
    }
    ComplexFile out{SimplicialComplex(n, std::move(facets), std::move(labels)), std::nullopt};
    if (j.contains("action")) {
      const auto& a = j["action"];
      GroupAction action;
      action.kind = parse_kind(a.at("kind").get<std::string>());
      action.order = a.at("order").get<std::size_t>();
      for (const auto& g : a.at("generators")) {
        auto perm = g.get<Permutation>();
        auto sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
          if (sorted[i] != static_cast<Vertex>(i)) throw std::invalid_argument("generator is not a permutation");
        }
        if (perm.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("generator has wrong length");
        action.generators.push_back(std::move(perm));
      }
      out.action = std::move(action);
    }
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(1, std::string("invalid complex JSON: ") + e.what());
  }
}

}  // namespace

std::string write_complex_text(const SimplicialComplex& k) {
  std::ostringstream out;
  out << "simplicial v1 " << k.vertex_count() << '\n';
  for (const auto& f : k.facets()) {
    bool first = true;
    for (Vertex v : f) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Json complex_to_json(const SimplicialComplex& k, const GroupAction* action) {
  Json j;
  j["vertex_count"] = k.vertex_count();
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(std::vector<Vertex>(f.begin(), f.end()));
  j["facets"] = std::move(facets);
  if (!k.labels().empty()) {
    Json labels = Json::array();
    for (const auto& l : k.labels()) labels.push_back({l.first, l.second});
    j["labels"] = std::move(labels);
  }
  if (action) {
    Json a;
    a["kind"] = kind_name(action->kind);
    a["order"] = action->order;
    a["generators"] = action->generators;
    j["action"] = std::move(a);
  }
  return j;
}

ComplexFile read_complex(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return complex_from_json(text);
  std::istringstream in(text);
  LineReader reader(in);
  std::vector<std::string> tokens;
  reader.header(tokens, "simplicial", 3);
  int n = static_cast<int>(reader.integer(tokens[2], 0, kMaxLabel));
  std::vector<Simplex> facets;
  while (reader.next(tokens)) {
    std::vector<Vertex> vs;
    for (const auto& t : tokens) vs.push_back(static_cast<Vertex>(reader.integer(t, 0, n - 1)));
    try {
      facets.emplace_back(std::move(vs));
    } catch (const std::exception& e) {
      reader.fail(e.what());
    }
  }
  return {SimplicialComplex(n, std::move(facets)), std::nullopt};
}

ComplexFile read_complex(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_complex(text);
}

PointConfiguration read_points(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  reader.header(tokens, "points", 4);
  auto d = static_cast<std::size_t>(reader.integer(tokens[2], 0, kMaxLabel));
  auto n = static_cast<std::size_t>(reader.integer(tokens[3], 1, kMaxLabel));
  std::vector<RatVector> points;
  while (reader.next(tokens)) {
    if (points.size() == n) reader.fail("more than " + std::to_string(n) + " points");
    if (tokens.size() != d) {
      reader.fail("expected " + std::to_string(d) + " coordinates, got " + std::to_string(tokens.size()));
    }
    RatVector p;
    for (const auto& t : tokens) p.push_back(reader.rational(t));
    points.push_back(std::move(p));
  }
  if (points.size() != n) {
    reader.fail("expected " + std::to_string(n) + " points, got " + std::to_string(points.size()));
  }
  return PointConfiguration(d, std::move(points));
}

std::string write_points(const PointConfiguration& p) {
  std::ostringstream out;
  out << "points v1 " << p.dimension() << ' ' << p.size() << '\n';
  for (const auto& x : p.points()) {
    for (std::size_t t = 0; t < x.size(); ++t) out << (t ? " " : "") << to_string(x[t]);
    out << '\n';
  }
  return out.str();
}

Coloring read_colors(std::istream& in, std::size_t vertex_count) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  reader.header(tokens, "colors", 2);
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(vertex_count, false);
  while (reader.next(tokens)) {
    std::vector<std::size_t> cls;
    for (const auto& t : tokens) {
      auto v = static_cast<std::size_t>(reader.integer(t, 0, static_cast<long>(vertex_count) - 1));
      if (seen[v]) reader.fail("vertex " + t + " colored twice");
      seen[v] = true;
      cls.push_back(v);
    }
    classes.push_back(std::move(cls));
  }
  auto missing = std::find(seen.begin(), seen.end(), false);
  if (missing != seen.end()) {
    reader.fail("vertex " + std::to_string(missing - seen.begin()) + " has no color");
  }
  return Coloring(vertex_count, std::move(classes));
}

std::string write_colors(const Coloring& c) {
  std::ostringstream out;
  out << "colors v1\n";
  for (const auto& cls : c.classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
    out << '\n';
  }
  return out.str();
}

RatMatrix read_rat_triplets(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  reader.header(tokens, "triplets", 4);
  auto rows = static_cast<std::size_t>(reader.integer(tokens[2], 0, 1L << 20));
  auto cols = static_cast<std::size_t>(reader.integer(tokens[3], 0, 1L << 20));
  RatMatrix m(rows, cols);
  while (reader.next(tokens)) {
    if (tokens.size() != 3) reader.fail("expected 'row col value'");
    auto r = static_cast<std::size_t>(reader.integer(tokens[0], 0, static_cast<long>(rows) - 1));
    auto c = static_cast<std::size_t>(reader.integer(tokens[1], 0, static_cast<long>(cols) - 1));
    m(r, c) += reader.rational(tokens[2]);
  }
  return m;
}

std::string write_rat_triplets(const RatMatrix& m) {
  std::ostringstream out;
  out << "triplets v1 " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, c) != 0) out << r << ' ' << c << ' ' << to_string(m(r, c)) << '\n';
    }
  }
  return out.str();
}

Json rationals_to_json(const RatVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json certificate_to_json(const PartitionCertificate& c) {
  Json j;
  j["parts"] = c.parts;
  j["point"] = rationals_to_json(c.point);
  Json coeffs = Json::array();
  for (const auto& v : c.coefficients) coeffs.push_back(rationals_to_json(v));
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json homology_to_json(const HomologySummary& h) {
  Json degrees = Json::array();
  for (const auto& d : h.degrees) {
    Json e;
    e["degree"] = d.degree;
    e["betti"] = d.betti;
    Json torsion = Json::array();
    for (const auto& t : d.torsion) torsion.push_back(integer_json(t));
    e["torsion"] = std::move(torsion);
    degrees.push_back(std::move(e));
  }
  return degrees;
}

}  // namespace tverberg
