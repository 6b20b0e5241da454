#include "tverberg/chain_complex.hpp"

#include <stdexcept>

namespace tverberg {

ChainComplex::ChainComplex(std::vector<std::vector<Cell>> bases, std::vector<IntMatrix> boundaries)
    : bases_(std::move(bases)), boundaries_(std::move(boundaries)) {
  while (!bases_.empty() && bases_.back().empty()) bases_.pop_back();
  boundaries_.resize(bases_.size());
  for (std::size_t q = 0; q < bases_.size(); ++q) {
    const int cols = static_cast<int>(bases_[q].size());
    const int rows = q == 0 ? 0 : static_cast<int>(bases_[q - 1].size());
    if (boundaries_[q].rows() == 0 && boundaries_[q].cols() == 0) boundaries_[q] = IntMatrix(rows, cols);
    if (boundaries_[q].rows() != rows || boundaries_[q].cols() != cols)
      throw std::invalid_argument("boundary matrix shape does not match bases");
  }
}

std::span<const Cell> ChainComplex::basis(int q) const {
  if (q < 0 || q > top_degree()) return {};
  return bases_[static_cast<std::size_t>(q)];
}

const IntMatrix& ChainComplex::boundary(int q) const {
  if (q < 0 || q > top_degree()) return empty_;
  return boundaries_[static_cast<std::size_t>(q)];
}

std::size_t ChainComplex::cell_count() const {
  std::size_t n = 0;
  for (const auto& b : bases_) n += b.size();
  return n;
}

ChainComplex chain_complex(const SimplicialComplex& k) {
  std::vector<std::vector<Cell>> bases;
  std::vector<IntMatrix> boundaries;
  for (int q = 0; q <= k.dimension(); ++q) {
    auto faces = k.faces(q);
    std::vector<Cell> basis;
    basis.reserve(faces.size());
    for (const auto& s : faces) basis.push_back(Cell{s});
    bases.push_back(std::move(basis));

    if (q == 0) {
      boundaries.emplace_back(0, static_cast<int>(faces.size()));
      continue;
    }
    std::vector<Triplet> t;
    t.reserve(faces.size() * static_cast<std::size_t>(q + 1));
    for (std::size_t j = 0; j < faces.size(); ++j) {
      for (std::size_t i = 0; i < faces[j].size(); ++i) {
        const auto row = k.index_of(faces[j].without(i));
        t.push_back({static_cast<int>(*row), static_cast<int>(j), BigInt(i % 2 == 0 ? 1 : -1)});
      }
    }
    boundaries.push_back(IntMatrix::from_triplets(static_cast<int>(k.faces(q - 1).size()),
                                                  static_cast<int>(faces.size()), std::move(t)));
  }
  return ChainComplex(std::move(bases), std::move(boundaries));
}

Chain boundary_of(const ChainComplex& c, const Chain& z) {
  Chain out;
  out.degree = z.degree - 1;
  if (z.degree <= 0) return out;
  const IntMatrix& d = c.boundary(z.degree);
  for (const auto& [cell, coeff] : z.coefficients) {
    if (cell >= c.rank(z.degree)) throw std::out_of_range("chain cell outside basis");
    for (const auto& e : d.column(static_cast<int>(cell))) {
      BigInt& slot = out.coefficients[static_cast<std::size_t>(e.row)];
      slot += coeff * e.value;
      if (slot == 0) out.coefficients.erase(static_cast<std::size_t>(e.row));
    }
  }
  return out;
}

bool boundary_squares_vanish_serial(const ChainComplex& c) {
  for (int q = 2; q <= c.top_degree(); ++q)
    if (!(c.boundary(q - 1) * c.boundary(q)).is_zero()) return false;
  return true;
}

bool boundary_squares_vanish(const ChainComplex& c) {
  const int top = c.top_degree();
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (int q = 2; q <= top; ++q) ok = ok && (c.boundary(q - 1) * c.boundary(q)).is_zero();
  return ok;
}

}  // namespace tverberg
