#include "catmag/magnitude.hpp"

#include <utility>

#include "catmag/errors.hpp"
#include "catmag/linalg.hpp"

namespace catmag {

namespace {

void require_square(const Matrix& m, const char* op) {
  if (!m.square()) throw ShapeError(std::string(op) + " needs a square matrix, got " + m.shape_string());
}

std::vector<Rational> row_sums(const Matrix& m) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) out[i] += x;
  return out;
}

std::vector<Rational> column_sums(const Matrix& m) {
  std::vector<Rational> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(i, j);
  return out;
}

Rational total(const std::vector<Rational>& v) {
  Rational t;
  for (const auto& x : v) t += x;
  return t;
}

}  // namespace

std::optional<std::vector<Rational>> weighting_from_pinv(const Matrix& m, const Matrix& m_pinv) {
  require_square(m, "weighting");
  std::vector<Rational> w = row_sums(m_pinv);  // M+ 1
  const Matrix check = m * Matrix(w.size(), 1, w);
  for (std::size_t i = 0; i < check.rows(); ++i)
    if (!check(i, 0).is_one()) return std::nullopt;
  return w;
}

std::optional<std::vector<Rational>> coweighting_from_pinv(const Matrix& m, const Matrix& m_pinv) {
  require_square(m, "coweighting");
  std::vector<Rational> z = column_sums(m_pinv);  // 1^T M+
  const Matrix check = Matrix(1, z.size(), z) * m;
  for (std::size_t j = 0; j < check.cols(); ++j)
    if (!check(0, j).is_one()) return std::nullopt;
  return z;
}

std::optional<std::vector<Rational>> weighting_of(const Matrix& m) {
  require_square(m, "weighting");
  return weighting_from_pinv(m, pinv(m));
}

std::optional<std::vector<Rational>> coweighting_of(const Matrix& m) {
  require_square(m, "coweighting");
  return coweighting_from_pinv(m, pinv(m));
}

std::optional<SolutionSet> weighting_solutions(const Matrix& m) {
  auto w = weighting_of(m);
  if (!w) return std::nullopt;
  return SolutionSet{std::move(*w), nullspace(m)};
}

std::optional<SolutionSet> coweighting_solutions(const Matrix& m) {
  auto z = coweighting_of(m);
  if (!z) return std::nullopt;
  return SolutionSet{std::move(*z), nullspace(transpose(m))};
}

MagnitudeReport magnitude_of(const ZetaContext& zeta) {
  const Matrix& z = zeta.z;
  require_square(z, "magnitude");
  MagnitudeReport r;
  r.n = z.rows();
  r.objects = zeta.object_order;
  r.pseudo_mobius = pinv(z);
  r.rank = rank(z);
  if (r.rank == r.n) r.mobius = inverse(z);
  r.weighting = weighting_from_pinv(z, r.pseudo_mobius);
  r.coweighting = coweighting_from_pinv(z, r.pseudo_mobius);
  r.has_weighting = r.weighting.has_value();
  r.has_coweighting = r.coweighting.has_value();
  r.has_magnitude = r.has_weighting && r.has_coweighting;
  r.generalized_magnitude = entry_sum(r.pseudo_mobius);
  if (r.has_magnitude) r.magnitude = total(*r.weighting);
  return r;
}

MagnitudeReport magnitude_of(const Matrix& m) {
  require_square(m, "magnitude");
  ZetaContext ctx{{}, m};
  for (std::size_t i = 0; i < m.rows(); ++i) ctx.object_order.push_back(std::to_string(i));
  return magnitude_of(ctx);
}

MagnitudeReport magnitude_of_category(const FinCategory& c) { return magnitude_of(zeta_of(c)); }

MagnitudeReport magnitude_of_category(const Poset& p) { return magnitude_of(zeta_of(p)); }

// ---------------------------------------------------------------------------

namespace {

struct Bounds {
  std::size_t bottom;
  std::size_t top;
};

Bounds require_bounded(const Poset& p) {
  const auto bottom = p.minimum();
  const auto top = p.maximum();
  if (!bottom || !top) throw DomainError("poset has no unique minimum and maximum");
  if (*bottom == *top) throw DomainError("poset minimum and maximum coincide");
  return {*bottom, *top};
}

}  // namespace

Rational rota_characteristic(const Poset& p) {
  const Bounds b = require_bounded(p);
  const auto mu = inverse(zeta_of(p).z);
  if (!mu) throw DomainError("poset zeta matrix is singular");  // unreachable for valid posets
  return Rational(1) + (*mu)(b.bottom, b.top);
}

namespace {

void extend_chains(const Poset& p, std::size_t current, std::size_t length, std::size_t top,
                   std::vector<Integer>& counts) {
  if (current == top) {
    ++counts[length];
    return;
  }
  for (std::size_t next = 0; next < p.size(); ++next)
    if (p.less(current, next)) extend_chains(p, next, length + 1, top, counts);
}

}  // namespace

std::vector<Integer> rota_chain_counts(const Poset& p) {
  const Bounds b = require_bounded(p);
  std::vector<Integer> counts(p.size() + 1, 0);
  extend_chains(p, b.bottom, 1, b.top, counts);
  return counts;
}

Rational rota_chain_oracle(const Poset& p) {
  const std::vector<Integer> counts = rota_chain_counts(p);
  Integer alternating = 0;
  for (std::size_t i = 2; i < counts.size(); ++i) alternating += (i % 2 == 0 ? 1 : -1) * counts[i];
  return Rational(Integer(1 - alternating));
}

InteriorCheck interior_characteristic_check(const Poset& p) {
  const Bounds b = require_bounded(p);
  std::vector<std::size_t> interior;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (x != b.bottom && x != b.top) interior.push_back(x);
  const MagnitudeReport sub = magnitude_of_category(p.subposet(interior));
  if (!sub.has_magnitude) throw DomainError("interior subposet has no magnitude");  // posets always do
  return {*sub.magnitude, rota_characteristic(p)};
}

ProductCheck pseudo_mobius_product_check(const Matrix& a, const Matrix& b) {
  const Matrix a_pinv = pinv(a);
  const Matrix b_pinv = pinv(b);
  return {pinv(kronecker(a, b)) == kronecker(a_pinv, b_pinv),
          pinv(direct_sum(a, b)) == direct_sum(a_pinv, b_pinv)};
}

ProductCheck pseudo_mobius_product_check(const FinCategory& a, const FinCategory& b) {
  const Matrix a_pinv = pinv(zeta_of(a).z);
  const Matrix b_pinv = pinv(zeta_of(b).z);
  return {pinv(zeta_of(product(a, b)).z) == kronecker(a_pinv, b_pinv),
          pinv(zeta_of(coproduct(a, b)).z) == direct_sum(a_pinv, b_pinv)};
}

}  // namespace catmag
