#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catmag/category.hpp"
#include "catmag/matrix.hpp"

namespace catmag {

/// Weighting w = M+ 1 when M w = 1 holds exactly, otherwise nullopt. If M
/// has any weighting at all then M+ 1 is one, so nullopt means none exists.
/// Throws ShapeError for non-square M.
std::optional<std::vector<Rational>> weighting_of(const Matrix& m);
/// Coweighting z^T = 1^T M+ when z^T M = 1^T holds exactly.
std::optional<std::vector<Rational>> coweighting_of(const Matrix& m);

/// Same, reusing an already computed pseudoinverse.
std::optional<std::vector<Rational>> weighting_from_pinv(const Matrix& m, const Matrix& m_pinv);
std::optional<std::vector<Rational>> coweighting_from_pinv(const Matrix& m, const Matrix& m_pinv);

/// Every solution of M w = 1 is particular + nullspace * t.
struct SolutionSet {
  std::vector<Rational> particular;  // the pseudoinverse solution
  Matrix nullspace;                  // n x (n - rank), basis columns
};

std::optional<SolutionSet> weighting_solutions(const Matrix& m);
/// Solutions z of z^T M = 1^T; the basis spans the left nullspace of M.
std::optional<SolutionSet> coweighting_solutions(const Matrix& m);

struct MagnitudeReport {
  std::size_t n = 0;
  std::vector<std::string> objects;        // labels for weighting entries
  Matrix pseudo_mobius;                    // Z+
  std::optional<Matrix> mobius;            // Z^-1 when Z is invertible
  std::optional<std::vector<Rational>> weighting;
  std::optional<std::vector<Rational>> coweighting;
  bool has_weighting = false;
  bool has_coweighting = false;
  bool has_magnitude = false;
  std::optional<Rational> magnitude;       // set iff has_magnitude
  Rational generalized_magnitude;          // entry sum of Z+, always defined
  std::size_t rank = 0;                    // rank of Z
};

/// Objects are labelled "0".."n-1".
MagnitudeReport magnitude_of(const Matrix& m);
MagnitudeReport magnitude_of(const ZetaContext& zeta);
MagnitudeReport magnitude_of_category(const FinCategory& c);
MagnitudeReport magnitude_of_category(const Poset& p);

/// E = 1 + mu(0, 1). Requires a unique minimum and maximum with 0 != 1,
/// otherwise throws DomainError.
Rational rota_characteristic(const Poset& p);

/// E = 1 - sum_{i>=2} (-1)^i C_i with C_i the number of chains
/// 0 = c_1 < ... < c_i = 1, counted by exhaustive enumeration. Independent
/// of any matrix inversion.
Rational rota_chain_oracle(const Poset& p);

/// Chain counts C_i indexed by i (entries 0 and 1 are zero).
std::vector<Integer> rota_chain_counts(const Poset& p);

struct InteriorCheck {
  Rational lhs;  // magnitude of P without 0 and 1
  Rational rhs;  // 1 + mu(0, 1)
};

InteriorCheck interior_characteristic_check(const Poset& p);

struct ProductCheck {
  bool product = false;    // (A (x) B)+ == A+ (x) B+
  bool coproduct = false;  // (A (+) B)+ == A+ (+) B+

  bool ok() const { return product && coproduct; }
};

/// Pseudo-Mobius functions of A x B and A + B against those of the factors.
/// The category overload builds the actual product and coproduct categories.
ProductCheck pseudo_mobius_product_check(const Matrix& a, const Matrix& b);
ProductCheck pseudo_mobius_product_check(const FinCategory& a, const FinCategory& b);

}  // namespace catmag
