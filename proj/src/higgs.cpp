#include "najc/higgs.hpp"

#include "najc/errors.hpp"

#include <optional>
#include <string>

namespace najc {

Matrix GradedOperator::block(std::size_t p, std::size_t q) const {
  if (p >= weight() || q >= weight())
    return Matrix{};
  return full.block(offsets[q], offsets[p], offsets[q + 1] - offsets[q], offsets[p + 1] - offsets[p]);
}

Matrix GradedOperator::band(int shift) const {
  Matrix out(dim(), dim());
  for (std::size_t p = 0; p < weight(); ++p) {
    const long q = static_cast<long>(p) + shift;
    if (q < 0 || q >= static_cast<long>(weight()))
      continue;
    out.set_block(offsets[q], offsets[p], block(p, static_cast<std::size_t>(q)));
  }
  return out;
}

bool GradedOperator::is_tridiagonal() const {
  for (std::size_t p = 0; p < weight(); ++p)
    for (std::size_t q = 0; q < weight(); ++q)
      if ((p > q + 1 || q > p + 1) && !block(p, q).is_zero())
        return false;
  return true;
}

OperatorFrame::OperatorFrame(const Decomposition& dec) : basis_(dec.operator_basis()) {
  const auto red = rref(basis_);
  if (red.rank != basis_.rows())
    throw LeakageError("adapted basis of H~_{-w} is not independent");
  pivots_ = red.pivots;
  const std::size_t m = dim();
  // v[pivots] = S^T a with S the basis restricted to pivot columns.
  Matrix st(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      st(j, i) = basis_(i, pivots_[j]);
  inverse_ = Matrix(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    const Vector col = solve(st, unit_vector(m, c));
    for (std::size_t r = 0; r < m; ++r)
      inverse_(r, c) = col[r];
  }
}

Vector OperatorFrame::coordinates(std::span<const Rational> v) const {
  Vector restricted(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    restricted[j] = v[pivots_[j]];
  Vector a = inverse_ * restricted;
  if (function(a) != Vector(v.begin(), v.end()))
    throw LeakageError("image leaves H~_{-w}");
  return a;
}

Vector OperatorFrame::function(std::span<const Rational> coords) const {
  return basis_.transpose() * coords;
}

GradedOperator mult_operator(const Decomposition& dec, std::span<const Rational> t,
                             BandCheck check) {
  return mult_operator(dec, OperatorFrame(dec), t, check);
}

GradedOperator mult_operator(const Decomposition& dec, const OperatorFrame& frame,
                             std::span<const Rational> t, BandCheck check) {
  if (t.size() != dec.ambient_dim())
    throw DimensionMismatch("multiplier length differs from point count");
  if (!dec.h0().contains(t))
    throw NotInH0("multiplier is not in H^0");
  GradedOperator op;
  op.t.assign(t.begin(), t.end());
  op.offsets.assign(dec.block_offsets.begin(), dec.block_offsets.end() - 1);
  const std::size_t m = frame.dim();
  op.full = Matrix(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Vector image = frame.coordinates(hadamard(t, frame.basis().row(j)));
    for (std::size_t i = 0; i < m; ++i)
      op.full(i, j) = image[i];
  }
  if (check == BandCheck::enforce && !op.is_tridiagonal())
    throw LeakageError("multiplication shifts the grading by more than one");
  return op;
}

Split split(const GradedOperator& op) { return {op.band(-1), op.band(0), op.band(1)}; }

Matrix wedge(const Matrix& a_t, const Matrix& b_s, const Matrix& a_s, const Matrix& b_t) {
  return a_t * b_s - a_s * b_t;
}

namespace {

// First violated relation for the pair, if any.
std::optional<std::string> check_pair(const Split& t, const Split& s, const Matrix& ft,
                                      const Matrix& fs) {
  if (!wedge(t.plus, s.plus, s.plus, t.plus).is_zero())
    return "plus^plus";
  if (!wedge(t.minus, s.minus, s.minus, t.minus).is_zero())
    return "minus^minus";
  if (!(wedge(t.zero, s.plus, s.zero, t.plus) + wedge(t.plus, s.zero, s.plus, t.zero)).is_zero())
    return "zero^plus+plus^zero";
  if (!(wedge(t.zero, s.minus, s.zero, t.minus) + wedge(t.minus, s.zero, s.minus, t.zero))
         .is_zero())
    return "zero^minus+minus^zero";
  if (!(wedge(t.zero, s.zero, s.zero, t.zero) + wedge(t.plus, s.minus, s.plus, t.minus) +
        wedge(t.minus, s.plus, s.minus, t.plus))
         .is_zero())
    return "zero^zero+plus^minus+minus^plus";
  if (!wedge(ft, fs, fs, ft).is_zero())
    return "D^D";
  return std::nullopt;
}

}  // namespace

RelationReport verify_relations(const Decomposition& dec, Backend backend) {
  const OperatorFrame frame(dec);
  const Matrix& h0 = dec.h0().basis();
  const std::size_t r = h0.rows();
  std::vector<GradedOperator> ops(r);
  std::vector<Split> splits(r);
  for (std::size_t i = 0; i < r; ++i) {
    ops[i] = mult_operator(dec, frame, h0.row(i), BandCheck::skip);
    splits[i] = split(ops[i]);
  }

  const auto pairs = static_cast<long>(r * r);
  std::vector<std::optional<std::string>> failures(r * r);
  const bool parallel =
    backend == Backend::parallel || (backend == Backend::automatic && max_threads() > 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long idx = 0; idx < pairs; ++idx) {
    const auto i = static_cast<std::size_t>(idx) / r;
    const auto j = static_cast<std::size_t>(idx) % r;
    failures[idx] = check_pair(splits[i], splits[j], ops[i].full, ops[j].full);
  }
  for (std::size_t idx = 0; idx < failures.size(); ++idx)
    if (failures[idx])
      throw RelationViolation(idx / r, idx % r, *failures[idx]);
  return {true, r * r};
}

Matrix deformed_operator(const GradedOperator& op, const Rational& z, std::span<const Rational> x,
                         std::span<const Rational> y) {
  const std::size_t w = op.weight();
  Matrix out(op.dim(), op.dim());
  for (std::size_t p = 0; p < w; ++p)
    out.set_block(op.offsets[p], op.offsets[p], z * op.block(p, p));
  for (std::size_t p = 0; p + 1 < w; ++p) {
    out.set_block(op.offsets[p + 1], op.offsets[p], x[p] * op.block(p, p + 1));
    out.set_block(op.offsets[p], op.offsets[p + 1], y[p] * op.block(p + 1, p));
  }
  return out;
}

bool higgs_family_check(const Decomposition& dec, const Rational& z, std::span<const Rational> x,
                        std::span<const Rational> y) {
  const std::size_t w = dec.weight();
  const std::size_t slots = w == 0 ? 0 : w - 1;
  if (x.size() != slots || y.size() != slots)
    throw DimensionMismatch("x and y need w - 1 entries");
  for (std::size_t p = 0; p < slots; ++p)
    if (x[p] * y[p] != z * z)
      throw InputNotOnVariety("x_" + std::to_string(p) + " y_" + std::to_string(p) + " != z^2");

  const OperatorFrame frame(dec);
  const Matrix& h0 = dec.h0().basis();
  std::vector<Matrix> deformed;
  for (std::size_t i = 0; i < h0.rows(); ++i)
    deformed.push_back(deformed_operator(mult_operator(dec, frame, h0.row(i)), z, x, y));
  for (std::size_t i = 0; i < deformed.size(); ++i)
    for (std::size_t j = 0; j < deformed.size(); ++j)
      if (!wedge(deformed[i], deformed[j], deformed[j], deformed[i]).is_zero())
        return false;
  return true;
}

}  // namespace najc
