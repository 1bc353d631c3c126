#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "catmag/generators.hpp"

namespace catmag::testing {

Rational random_rational(Rng& rng, int max_abs, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational::make(num(rng), den(rng));
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_abs, int max_den) {
  Matrix m(rows, cols);
  for (auto& x : m.data()) x = random_rational(rng, max_abs, max_den);
  return m;
}

Matrix random_matrix_with_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer scale = 1;
    for (const auto& x : m.row(i)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.denominator().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).numerator() * (scale / m(i, j).denominator());
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

bool solvable(const Matrix& m, const Matrix& b) { return bareiss_rank(m) == bareiss_rank(m.hconcat(b)); }

Integer classical_mobius(std::size_t d) {
  static std::map<std::size_t, Integer> memo;
  if (d == 1) return 1;
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  Integer sum = 0;
  for (std::size_t e = 1; e < d; ++e)
    if (d % e == 0) sum += classical_mobius(e);
  memo[d] = -sum;
  return -sum;
}

std::vector<Poset> naturally_labelled_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));

  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<unsigned char> rel(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) rel[slots[s].first * n + slots[s].second] = 1;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (rel[a * n + b] && rel[b * n + c] && !rel[a * n + c]) transitive = false;
    if (transitive) out.push_back(Poset::close(names, rel));
  }
  return out;
}

std::vector<Poset> bounded_posets(std::size_t max_size) {
  std::vector<Poset> out;
  for (std::size_t n = 2; n <= max_size; ++n)
    for (auto& p : naturally_labelled_posets(n)) {
      const auto lo = p.minimum();
      const auto hi = p.maximum();
      if (lo && hi && *lo != *hi) out.push_back(std::move(p));
    }
  return out;
}

Poset random_poset(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  const std::vector<std::size_t> label = random_permutation(rng, n);
  std::vector<unsigned char> rel(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (edge(rng)) rel[label[a] * n + label[b]] = 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return Poset::close(names, rel);
}

FinCategory random_concrete_category(Rng& rng) {
  std::uniform_int_distribution<std::size_t> object_count(1, 3);
  std::uniform_int_distribution<std::size_t> set_size(1, 3);
  const std::size_t k = object_count(rng);
  std::vector<std::size_t> sizes(k);
  for (auto& s : sizes) s = set_size(rng);

  struct Fn {
    std::size_t src, tgt;
    std::vector<std::size_t> map;
    auto operator<=>(const Fn&) const = default;
  };
  std::set<Fn> fns;
  for (std::size_t o = 0; o < k; ++o) {
    Fn id{o, o, std::vector<std::size_t>(sizes[o])};
    std::iota(id.map.begin(), id.map.end(), 0);
    fns.insert(id);
  }
  std::uniform_int_distribution<std::size_t> generators(1, 4);
  std::uniform_int_distribution<std::size_t> pick_object(0, k - 1);
  for (std::size_t g = generators(rng); g > 0; --g) {
    Fn f{pick_object(rng), pick_object(rng), {}};
    std::uniform_int_distribution<std::size_t> image(0, sizes[f.tgt] - 1);
    for (std::size_t x = 0; x < sizes[f.src]; ++x) f.map.push_back(image(rng));
    fns.insert(f);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Fn> current(fns.begin(), fns.end());
    for (const auto& f : current)
      for (const auto& g : current) {
        if (f.tgt != g.src) continue;
        Fn h{f.src, g.tgt, {}};
        for (std::size_t x : f.map) h.map.push_back(g.map[x]);
        grew |= fns.insert(h).second;
      }
  }

  const std::vector<Fn> all(fns.begin(), fns.end());
  CategorySpec s;
  for (std::size_t o = 0; o < k; ++o) s.objects.push_back("X" + std::to_string(o));
  std::vector<std::string> names(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    names[i] = "m" + std::to_string(i);
    s.morphisms.push_back({names[i], s.objects[all[i].src], s.objects[all[i].tgt]});
    const bool identity = all[i].src == all[i].tgt && std::is_sorted(all[i].map.begin(), all[i].map.end()) &&
                          std::adjacent_find(all[i].map.begin(), all[i].map.end()) == all[i].map.end();
    if (identity) s.identities.emplace_back(s.objects[all[i].src], names[i]);
  }
  for (std::size_t f = 0; f < all.size(); ++f)
    for (std::size_t g = 0; g < all.size(); ++g) {
      if (all[f].tgt != all[g].src) continue;
      Fn h{all[f].src, all[g].tgt, {}};
      for (std::size_t x : all[f].map) h.map.push_back(all[g].map[x]);
      const auto idx = static_cast<std::size_t>(std::distance(all.begin(), std::find(all.begin(), all.end(), h)));
      s.composition.push_back({names[g], names[f], names[idx]});
    }
  return FinCategory::validate(s);
}

FinCategory random_category(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 6);
  std::uniform_int_distribution<std::size_t> small(1, 4);
  switch (kind(rng)) {
    case 0: return random_poset(rng, small(rng) + 1, 0.4).as_category();
    case 1: return random_concrete_category(rng);
    case 2: return gen_indiscrete(small(rng));
    case 3: return gen_cyclic_monoid(small(rng));
    case 4: return product(random_concrete_category(rng), random_poset(rng, small(rng), 0.5).as_category());
    case 5: return coproduct(random_concrete_category(rng), gen_indiscrete(small(rng)));
    default: return coproduct(gen_discrete(small(rng)), random_poset(rng, small(rng), 0.5).as_category());
  }
}

Matrix column(const std::vector<Rational>& v) { return Matrix(v.size(), 1, v); }
Matrix row(const std::vector<Rational>& v) { return Matrix(1, v.size(), v); }

}  // namespace catmag::testing
