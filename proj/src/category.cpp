#include "catmag/category.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "catmag/errors.hpp"
#include "catmag/kernels.hpp"

namespace catmag {

namespace {

constexpr std::uint32_t kNoComposite = std::numeric_limits<std::uint32_t>::max();

using NameIndex = std::unordered_map<std::string, std::size_t>;

NameIndex index_names(const std::vector<std::string>& names, const char* what) {
  NameIndex index;
  index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw CategoryError(std::string("duplicate ") + what + " name '" + names[i] + "'");
    }
  }
  return index;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

FinCategory FinCategory::validate(const CategorySpec& spec) {
  FinCategory c;
  c.objects_ = spec.objects;
  const NameIndex object_index = index_names(c.objects_, "object");
  const std::size_t n = c.objects_.size();

  auto lookup_object = [&](const std::string& name, const std::string& context) {
    auto it = object_index.find(name);
    if (it == object_index.end()) throw CategoryError(context + ": unknown object " + quote(name));
    return it->second;
  };

  NameIndex morphism_index;
  morphism_index.reserve(spec.morphisms.size());
  c.morphisms_.reserve(spec.morphisms.size());
  for (const auto& m : spec.morphisms) {
    const std::string ctx = "morphism " + quote(m.name);
    if (!morphism_index.emplace(m.name, c.morphisms_.size()).second) {
      throw CategoryError("duplicate morphism name " + quote(m.name));
    }
    c.morphisms_.push_back({m.name, lookup_object(m.src, ctx), lookup_object(m.tgt, ctx)});
  }
  const std::size_t count = c.morphisms_.size();
  if (count >= kNoComposite) throw CategoryError("too many morphisms");

  auto lookup_morphism = [&](const std::string& name, const std::string& context) {
    auto it = morphism_index.find(name);
    if (it == morphism_index.end()) {
      throw CategoryError(context + ": unknown morphism " + quote(name));
    }
    return it->second;
  };

  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  c.identities_.assign(n, kUnset);
  for (const auto& [object, morphism] : spec.identities) {
    const std::string ctx = "identity of " + quote(object);
    const std::size_t o = lookup_object(object, ctx);
    const std::size_t m = lookup_morphism(morphism, ctx);
    if (c.identities_[o] != kUnset) throw CategoryError("duplicate identity for object " + quote(object));
    const auto& mor = c.morphisms_[m];
    if (mor.src != o || mor.tgt != o) {
      throw CategoryError(ctx + ": morphism " + quote(morphism) + " is " +
                          c.objects_[mor.src] + " -> " + c.objects_[mor.tgt] + ", not an endomorphism of " +
                          quote(object));
    }
    c.identities_[o] = m;
  }
  for (std::size_t o = 0; o < n; ++o) {
    if (c.identities_[o] == kUnset) throw CategoryError("missing identity for object " + quote(c.objects_[o]));
  }

  c.out_.assign(n, {});
  c.in_.assign(n, {});
  c.in_position_.assign(count, 0);
  for (std::size_t m = 0; m < count; ++m) {
    c.out_[c.morphisms_[m].src].push_back(m);
    c.in_position_[m] = c.in_[c.morphisms_[m].tgt].size();
    c.in_[c.morphisms_[m].tgt].push_back(m);
  }
  c.composites_.resize(count);
  for (std::size_t g = 0; g < count; ++g) {
    c.composites_[g].assign(c.in_[c.morphisms_[g].src].size(), kNoComposite);
  }

  for (const auto& e : spec.composition) {
    const std::string ctx = "composition entry [" + e.g + ", " + e.f + ", " + e.h + "]";
    const std::size_t g = lookup_morphism(e.g, ctx);
    const std::size_t f = lookup_morphism(e.f, ctx);
    const std::size_t h = lookup_morphism(e.h, ctx);
    const auto& mf = c.morphisms_[f];
    const auto& mg = c.morphisms_[g];
    const auto& mh = c.morphisms_[h];
    if (mf.tgt != mg.src) {
      throw CategoryError(ctx + ": " + quote(e.g) + " o " + quote(e.f) + " is not composable (" +
                          quote(e.f) + " ends at " + quote(c.objects_[mf.tgt]) + ", " + quote(e.g) +
                          " starts at " + quote(c.objects_[mg.src]) + ")");
    }
    if (mh.src != mf.src || mh.tgt != mg.tgt) {
      throw CategoryError(ctx + ": composite has src/tgt mismatch, expected " + c.objects_[mf.src] +
                          " -> " + c.objects_[mg.tgt] + ", got " + c.objects_[mh.src] + " -> " +
                          c.objects_[mh.tgt]);
    }
    std::uint32_t& slot = c.composites_[g][c.in_position_[f]];
    if (slot != kNoComposite) {
      throw CategoryError(ctx + ": extra composition entry for (" + e.g + ", " + e.f + ")");
    }
    slot = static_cast<std::uint32_t>(h);
  }

  for (std::size_t g = 0; g < count; ++g) {
    const auto& sources = c.in_[c.morphisms_[g].src];
    for (std::size_t k = 0; k < sources.size(); ++k) {
      if (c.composites_[g][k] == kNoComposite) {
        throw CategoryError("missing composite (" + c.morphisms_[g].name + ", " +
                            c.morphisms_[sources[k]].name + ")");
      }
    }
  }

  for (std::size_t f = 0; f < count; ++f) {
    const auto& mf = c.morphisms_[f];
    const std::size_t right = c.compose(f, c.identities_[mf.src]);
    const std::size_t left = c.compose(c.identities_[mf.tgt], f);
    if (right != f) {
      throw CategoryError("identity law fails: " + mf.name + " o " +
                          c.morphisms_[c.identities_[mf.src]].name + " = " + c.morphisms_[right].name);
    }
    if (left != f) {
      throw CategoryError("identity law fails: " + c.morphisms_[c.identities_[mf.tgt]].name + " o " +
                          mf.name + " = " + c.morphisms_[left].name);
    }
  }

  for (std::size_t f = 0; f < count; ++f) {
    for (std::size_t g : c.out_[c.morphisms_[f].tgt]) {
      const std::size_t gf = c.compose(g, f);
      for (std::size_t h : c.out_[c.morphisms_[g].tgt]) {
        const std::size_t lhs = c.compose(h, gf);
        const std::size_t rhs = c.compose(c.compose(h, g), f);
        if (lhs != rhs) {
          const auto& name = [&](std::size_t m) -> const std::string& { return c.morphisms_[m].name; };
          throw CategoryError("associativity violation at (" + name(h) + ", " + name(g) + ", " +
                              name(f) + "): h o (g o f) = " + name(lhs) + " but (h o g) o f = " +
                              name(rhs));
        }
      }
    }
  }

  c.hom_.assign(n * n, 0);
  for (const auto& m : c.morphisms_) ++c.hom_[m.src * n + m.tgt];
  return c;
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  const auto& mf = morphisms_.at(f);
  if (morphisms_.at(g).src != mf.tgt) {
    throw std::invalid_argument("morphisms " + morphisms_[g].name + " and " + mf.name +
                                " are not composable");
  }
  return composites_[g][in_position_[f]];
}

std::optional<std::size_t> FinCategory::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> FinCategory::find_morphism(const std::string& name) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == name) return i;
  return std::nullopt;
}

CategorySpec FinCategory::spec() const {
  CategorySpec s;
  s.objects = objects_;
  s.morphisms.reserve(morphisms_.size());
  for (const auto& m : morphisms_) s.morphisms.push_back({m.name, objects_[m.src], objects_[m.tgt]});
  for (std::size_t o = 0; o < objects_.size(); ++o)
    s.identities.emplace_back(objects_[o], morphisms_[identities_[o]].name);
  for (std::size_t g = 0; g < morphisms_.size(); ++g) {
    for (std::size_t f : in_[morphisms_[g].src]) {
      s.composition.push_back({morphisms_[g].name, morphisms_[f].name, morphisms_[compose(g, f)].name});
    }
  }
  return s;
}

FinCategory FinCategory::reorder(std::span<const std::size_t> perm) const {
  if (perm.size() != objects_.size()) throw std::invalid_argument("permutation has wrong length");
  CategorySpec s = spec();
  s.objects.clear();
  for (std::size_t i : perm) s.objects.push_back(objects_.at(i));
  return validate(s);
}

// ---------------------------------------------------------------------------

Poset Poset::close(std::vector<std::string> objects,
                   const std::vector<std::pair<std::string, std::string>>& pairs) {
  const NameIndex index = index_names(objects, "object");
  const std::size_t n = objects.size();
  std::vector<unsigned char> rel(n * n, 0);
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw CategoryError("relation [" + a + ", " + b + "]: unknown object " + quote(a));
    if (ib == index.end()) throw CategoryError("relation [" + a + ", " + b + "]: unknown object " + quote(b));
    rel[ia->second * n + ib->second] = 1;
  }
  return close(std::move(objects), std::move(rel));
}

namespace {

// Shortest path from `from` to `to` along generating edges, endpoints included.
std::vector<std::size_t> find_path(const std::vector<unsigned char>& gen, std::size_t n,
                                   std::size_t from, std::size_t to) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    if (u == to) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u && gen[u * n + v] && parent[v] == kNone) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = to; v != from; v = parent[v]) path.insert(path.begin(), v);
  path.insert(path.begin(), from);
  return path;
}

}  // namespace

Poset Poset::close(std::vector<std::string> objects, std::vector<unsigned char> relation) {
  index_names(objects, "object");
  const std::size_t n = objects.size();
  if (relation.size() != n * n) throw std::invalid_argument("relation size does not match object count");
  Poset p;
  p.objects_ = std::move(objects);
  p.leq_ = relation;
  kernels::parallel::transitive_closure(p.leq_, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p.leq_[a * n + b] && p.leq_[b * n + a]) {
        std::vector<std::size_t> cycle = find_path(relation, n, a, b);
        const std::vector<std::size_t> back = find_path(relation, n, b, a);
        cycle.insert(cycle.end(), back.begin() + 1, back.end());
        std::string names;
        for (std::size_t k = 0; k < cycle.size(); ++k) names += (k ? " <= " : "") + p.objects_[cycle[k]];
        throw CategoryError("antisymmetry violated by cycle " + names);
      }
    }
  }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n && covering; ++c) covering = !(less(a, c) && less(c, b));
      if (covering) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<std::size_t> Poset::minimum() const {
  for (std::size_t m = 0; m < size(); ++m) {
    bool below_all = true;
    for (std::size_t x = 0; x < size() && below_all; ++x) below_all = leq(m, x);
    if (below_all) return m;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::maximum() const {
  for (std::size_t m = 0; m < size(); ++m) {
    bool above_all = true;
    for (std::size_t x = 0; x < size() && above_all; ++x) above_all = leq(x, m);
    if (above_all) return m;
  }
  return std::nullopt;
}

Poset Poset::subposet(std::span<const std::size_t> keep) const {
  Poset p;
  const std::size_t k = keep.size();
  std::vector<bool> seen(size(), false);
  for (std::size_t i : keep) {
    if (i >= size() || seen[i]) throw std::invalid_argument("subposet indices must be distinct and in range");
    seen[i] = true;
    p.objects_.push_back(objects_[i]);
  }
  p.leq_.assign(k * k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) p.leq_[a * k + b] = leq(keep[a], keep[b]) ? 1 : 0;
  return p;
}

FinCategory Poset::as_category() const {
  const std::size_t n = size();
  CategorySpec s;
  s.objects = objects_;
  auto name = [&](std::size_t a, std::size_t b) {
    return a == b ? "id_" + objects_[a] : objects_[a] + "<=" + objects_[b];
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(a, b)) s.morphisms.push_back({name(a, b), objects_[a], objects_[b]});
  for (std::size_t a = 0; a < n; ++a) s.identities.emplace_back(objects_[a], name(a, a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq(b, c)) s.composition.push_back({name(b, c), name(a, b), name(a, c)});
    }
  return FinCategory::validate(s);
}

// ---------------------------------------------------------------------------

ZetaContext zeta_of(const FinCategory& c) {
  const std::size_t n = c.object_count();
  ZetaContext ctx{c.objects(), Matrix(n, n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ctx.z(a, b) = static_cast<std::int64_t>(c.hom_count(a, b));
  return ctx;
}

ZetaContext zeta_of(const Poset& p) {
  const std::size_t n = p.size();
  ZetaContext ctx{p.objects(), Matrix(n, n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ctx.z(a, b) = p.leq(a, b) ? 1 : 0;
  return ctx;
}

FinCategory product(const FinCategory& a, const FinCategory& b) {
  auto pair = [](const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; };
  CategorySpec s;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) s.objects.push_back(pair(x, y));
  for (const auto& f : a.morphisms())
    for (const auto& g : b.morphisms())
      s.morphisms.push_back({pair(f.name, g.name), pair(a.objects()[f.src], b.objects()[g.src]),
                             pair(a.objects()[f.tgt], b.objects()[g.tgt])});
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < b.object_count(); ++y)
      s.identities.emplace_back(pair(a.objects()[x], b.objects()[y]),
                                pair(a.morphism(a.identity(x)).name, b.morphism(b.identity(y)).name));
  for (std::size_t f1 = 0; f1 < a.morphism_count(); ++f1)
    for (std::size_t f2 = 0; f2 < b.morphism_count(); ++f2)
      for (std::size_t g1 : a.out_of(a.morphism(f1).tgt))
        for (std::size_t g2 : b.out_of(b.morphism(f2).tgt))
          s.composition.push_back({pair(a.morphism(g1).name, b.morphism(g2).name),
                                   pair(a.morphism(f1).name, b.morphism(f2).name),
                                   pair(a.morphism(a.compose(g1, f1)).name,
                                        b.morphism(b.compose(g2, f2)).name)});
  return FinCategory::validate(s);
}

FinCategory coproduct(const FinCategory& a, const FinCategory& b) {
  CategorySpec s;
  for (const auto& [side, prefix] : {std::pair{&a, "L:"}, std::pair{&b, "R:"}}) {
    const CategorySpec part = side->spec();
    const std::string p = prefix;
    for (const auto& o : part.objects) s.objects.push_back(p + o);
    for (const auto& m : part.morphisms) s.morphisms.push_back({p + m.name, p + m.src, p + m.tgt});
    for (const auto& [o, m] : part.identities) s.identities.emplace_back(p + o, p + m);
    for (const auto& e : part.composition) s.composition.push_back({p + e.g, p + e.f, p + e.h});
  }
  return FinCategory::validate(s);
}

}  // namespace catmag
