#include "najc/hodge.hpp"

#include "najc/errors.hpp"
#include "najc/kernels.hpp"

#include <map>

namespace najc {

std::vector<std::size_t> Decomposition::ranks() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < summands.size(); ++p)
    out.push_back(rank(p));
  return out;
}

Matrix Decomposition::operator_basis() const { return adapted_basis.row_range(0, operator_dim()); }

Decomposition Decomposition::assemble(std::vector<Subspace> summands, Matrix gram) {
  Decomposition dec;
  const std::size_t d = gram.rows();
  dec.adapted_basis = Matrix(0, d);
  dec.block_offsets.push_back(0);
  for (const auto& s : summands) {
    dec.adapted_basis = vstack(dec.adapted_basis, s.basis());
    dec.block_offsets.push_back(dec.adapted_basis.rows());
  }
  dec.summands = std::move(summands);
  dec.gram = std::move(gram);
  return dec;
}

Subspace h_tilde_one(const ExtSpace& ext, const ExtClass& alpha) {
  if (auto reg = is_regular(alpha); !reg)
    throw NotRegular(*reg.witness, ext.config().label(*reg.witness));
  const auto& a = alpha.values();
  Matrix quotients(ext.delta(), a.size());
  for (std::size_t r = 0; r < ext.delta(); ++r)
    for (std::size_t z = 0; z < a.size(); ++z)
      quotients(r, z) = ext.basis()(r, z) / a[z];
  return Subspace::from_rows(quotients);
}

Filtration build_filtration(const Subspace& h1) {
  if (!h1.contains(ones(h1.ambient_dim())))
    throw MissingUnit("the constant function 1 is not in H~_{-1}");
  Filtration f;
  f.steps.push_back(h1);
  while (true) {
    const Subspace& current = f.steps.back();
    Subspace next = Subspace::from_rows(pairwise_products(h1.basis(), current.basis()));
    if (next.rank() == current.rank())
      break;
    f.steps.push_back(std::move(next));
  }
  for (const auto& s : f.steps)
    f.hilbert.push_back(s.rank());
  f.weight = f.steps.size();
  return f;
}

PolarizingResult is_polarizing(const Filtration& f, const Matrix& gram) {
  for (std::size_t k = 0; k < f.steps.size(); ++k)
    if (sgn(determinant(restricted_gram(f.steps[k].basis(), gram))) == 0)
      return {false, k + 1};
  return {};
}

Decomposition decompose(const Filtration& f, const Matrix& gram) {
  if (auto pol = is_polarizing(f, gram); !pol)
    throw NotPolarizing(*pol.failing_level);
  const std::size_t d = f.top().ambient_dim();
  std::vector<Subspace> summands;
  summands.push_back(f.steps.front());
  for (std::size_t p = 1; p < f.weight; ++p)
    summands.push_back(orth_complement(f.step(p), gram, f.step(p + 1)));
  summands.push_back(orth_complement(f.top(), gram, Subspace::whole(d)));
  return Decomposition::assemble(std::move(summands), gram);
}

KappaFibers kappa_fibers(const Subspace& h1, const Configuration& config) {
  if (h1.ambient_dim() != config.size())
    throw DimensionMismatch("subspace and configuration sizes differ");
  KappaFibers out;
  std::map<Vector, std::size_t> group_of;
  for (std::size_t z = 0; z < config.size(); ++z) {
    auto [it, inserted] = group_of.try_emplace(h1.basis().column(z), out.fibers.size());
    if (inserted)
      out.fibers.emplace_back();
    out.fibers[it->second].push_back(config.label(z));
  }
  out.degree = out.fibers.size();
  return out;
}

HodgeData analyze_hodge(const AnalysisInput& input) {
  Subspace h1 = h_tilde_one(input.ext, input.alpha);
  Filtration f = build_filtration(h1);
  Decomposition dec = decompose(f, trace_gram(input.config()));
  return {std::move(h1), std::move(f), std::move(dec)};
}

}  // namespace najc
