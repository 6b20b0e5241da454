#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "tverberg/exactlp.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/simplicial_complex.hpp"

namespace tverberg {

using Json = nlohmann::ordered_json;

/// `simplicial v1 <vertex_count>`, then one facet per line, facets sorted.
std::string write_complex_text(const SimplicialComplex& k);
Json complex_to_json(const SimplicialComplex& k, const GroupAction* action = nullptr);

struct ComplexFile {
  SimplicialComplex complex;
  std::optional<GroupAction> action;
};

/// Accepts either the text format or its JSON mirror (first non-blank
/// character `{`). Throws ParseError.
ComplexFile read_complex(std::istream& in);
ComplexFile read_complex(const std::string& text);

/// `points v1 <d> <n>`, then one point per line of `num/den` rationals.
PointConfiguration read_points(std::istream& in);
std::string write_points(const PointConfiguration& p);

/// `colors v1`, then one class per line of vertex indices.
Coloring read_colors(std::istream& in, std::size_t vertex_count);
std::string write_colors(const Coloring& c);

/// Rational matrices in the triplet format with `num/den` values.
RatMatrix read_rat_triplets(std::istream& in);
std::string write_rat_triplets(const RatMatrix& m);

Json certificate_to_json(const PartitionCertificate& c);
Json homology_to_json(const HomologySummary& h);
Json rationals_to_json(const RatVector& v);

}  // namespace tverberg
