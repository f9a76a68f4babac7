#include "najc/reference.hpp"

#include <vector>

namespace najc::reference {

namespace {

// Appends the product of every multiset of `degree` rows of `basis`.
void monomials(const Matrix& basis, std::size_t degree, std::size_t first, Vector& acc,
               std::vector<Vector>& out) {
  if (degree == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = first; i < basis.rows(); ++i) {
    Vector saved = acc;
    for (std::size_t k = 0; k < acc.size(); ++k)
      acc[k] *= basis(i, k);
    monomials(basis, degree - 1, i, acc, out);
    acc = std::move(saved);
  }
}

}  // namespace

Filtration symmetric_power_filtration(const Subspace& h1) {
  const std::size_t d = h1.ambient_dim();
  Filtration f;
  for (std::size_t degree = 1;; ++degree) {
    std::vector<Vector> products;
    Vector acc = ones(d);
    monomials(h1.basis(), degree, 0, acc, products);
    Subspace step = span(products, d);
    if (!f.steps.empty() && step.rank() == f.steps.back().rank())
      break;
    f.steps.push_back(std::move(step));
  }
  for (const auto& s : f.steps)
    f.hilbert.push_back(s.rank());
  f.weight = f.steps.size();
  return f;
}

}  // namespace najc::reference
