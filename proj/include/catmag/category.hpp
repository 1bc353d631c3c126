#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "catmag/matrix.hpp"

namespace catmag {

struct MorphismSpec {
  std::string name;
  std::string src;
  std::string tgt;

  friend bool operator==(const MorphismSpec&, const MorphismSpec&) = default;
};

/// One row of a composition table: g o f = h, where f: a -> b, g: b -> c
/// and h: a -> c.
struct CompositionEntry {
  std::string g;
  std::string f;
  std::string h;

  friend bool operator==(const CompositionEntry&, const CompositionEntry&) = default;
};

/// Unvalidated, name-based description of a finite category, as read from a
/// document. Turned into a FinCategory by FinCategory::validate.
struct CategorySpec {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object -> morphism
  std::vector<CompositionEntry> composition;

  friend bool operator==(const CategorySpec&, const CategorySpec&) = default;
};

/// A validated finite category with a total composition table.
///
/// Objects and morphisms are addressed by index, in declaration order.
class FinCategory {
 public:
  struct Morphism {
    std::string name;
    std::size_t src;
    std::size_t tgt;
  };

  /// The empty category.
  FinCategory() = default;

  /// Checks names, identities, composition closure, the identity laws and
  /// associativity. Throws CategoryError citing the offending morphisms.
  static FinCategory validate(const CategorySpec& spec);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  const Morphism& morphism(std::size_t m) const { return morphisms_.at(m); }

  std::size_t identity(std::size_t object) const { return identities_.at(object); }
  /// Index of g o f. Throws std::invalid_argument if tgt(f) != src(g).
  std::size_t compose(std::size_t g, std::size_t f) const;
  /// |Hom(a, b)|
  std::size_t hom_count(std::size_t a, std::size_t b) const { return hom_[a * objects_.size() + b]; }
  /// Morphisms with the given source, in declaration order.
  const std::vector<std::size_t>& out_of(std::size_t object) const { return out_.at(object); }

  std::optional<std::size_t> find_object(const std::string& name) const;
  std::optional<std::size_t> find_morphism(const std::string& name) const;

  /// Name-based description; re-validates to an equal category. Composition
  /// rows are listed by g, then by f in declaration order.
  CategorySpec spec() const;

  /// Same category with objects listed as objects()[perm[0]], objects()[perm[1]], ...
  FinCategory reorder(std::span<const std::size_t> perm) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b) { return a.spec() == b.spec(); }

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<std::vector<std::size_t>> out_;  // by source
  std::vector<std::vector<std::size_t>> in_;   // by target
  std::vector<std::size_t> in_position_;       // position of f within in_[tgt(f)]
  // composites_[g][in_position_[f]] = g o f, for f in in_[src(g)]
  std::vector<std::vector<std::uint32_t>> composites_;
  std::vector<std::size_t> hom_;
};

/// Finite partial order, stored as its closed relation.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of the generating pairs (a <= b).
  /// Throws CategoryError on unknown or duplicate names, and on any cycle
  /// through distinct elements (the message names the cycle).
  static Poset close(std::vector<std::string> objects,
                     const std::vector<std::pair<std::string, std::string>>& pairs);
  /// Index-based variant; `relation` is an n x n row-major 0/1 matrix of
  /// generating pairs.
  static Poset close(std::vector<std::string> objects, std::vector<unsigned char> relation);

  std::size_t size() const noexcept { return objects_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * objects_.size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  /// Covering pairs (a < b with nothing strictly between), row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;

  /// Full subposet on `keep`, in that order.
  Poset subposet(std::span<const std::size_t> keep) const;
  Poset reorder(std::span<const std::size_t> perm) const { return subposet(perm); }

  /// One morphism "x<=y" per comparable pair; identities are named "id_x".
  FinCategory as_category() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::string> objects_;
  std::vector<unsigned char> leq_;
};

/// Zeta matrix together with the object order that indexes it.
struct ZetaContext {
  std::vector<std::string> object_order;
  Matrix z;
};

/// Z(i, j) = |Hom(x_i, x_j)| in declaration order.
ZetaContext zeta_of(const FinCategory& c);
/// Z(i, j) = 1 if x_i <= x_j, else 0.
ZetaContext zeta_of(const Poset& p);

/// Objects are pairs "(x,a)" with the first factor major, so the zeta matrix
/// of the product is kronecker(Z_a, Z_b) entrywise.
FinCategory product(const FinCategory& a, const FinCategory& b);
/// Disjoint union; names are prefixed "L:" and "R:".
FinCategory coproduct(const FinCategory& a, const FinCategory& b);

}  // namespace catmag
