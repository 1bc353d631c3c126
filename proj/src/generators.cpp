#include "catmag/generators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace catmag {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

FinCategory gen_discrete(std::size_t n) {
  CategorySpec s;
  s.objects = numbered(n);
  for (const auto& o : s.objects) {
    s.morphisms.push_back({"id_" + o, o, o});
    s.identities.emplace_back(o, "id_" + o);
    s.composition.push_back({"id_" + o, "id_" + o, "id_" + o});
  }
  return FinCategory::validate(s);
}

FinCategory gen_indiscrete(std::size_t n) {
  CategorySpec s;
  s.objects = numbered(n);
  auto arrow = [&](std::size_t i, std::size_t j) { return s.objects[i] + "->" + s.objects[j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.morphisms.push_back({arrow(i, j), s.objects[i], s.objects[j]});
  for (std::size_t i = 0; i < n; ++i) s.identities.emplace_back(s.objects[i], arrow(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.composition.push_back({arrow(j, k), arrow(i, j), arrow(i, k)});
  return FinCategory::validate(s);
}

Poset gen_chain(std::size_t n) {
  std::vector<unsigned char> rel(n * n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) rel[i * n + i + 1] = 1;
  return Poset::close(numbered(n), std::move(rel));
}

Poset gen_divisors(std::size_t n) {
  if (n == 0) throw std::invalid_argument("divisor poset needs n >= 1");
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  const std::size_t k = divisors.size();
  std::vector<std::string> names;
  std::vector<unsigned char> rel(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back(std::to_string(divisors[a]));
    for (std::size_t b = 0; b < k; ++b) rel[a * k + b] = divisors[b] % divisors[a] == 0 ? 1 : 0;
  }
  return Poset::close(std::move(names), std::move(rel));
}

FinCategory gen_cyclic_monoid(std::size_t m) {
  if (m == 0) throw std::invalid_argument("cyclic monoid needs order m >= 1");
  CategorySpec s;
  s.objects = {"*"};
  auto g = [](std::size_t i) { return "g" + std::to_string(i); };
  for (std::size_t i = 0; i < m; ++i) s.morphisms.push_back({g(i), "*", "*"});
  s.identities.emplace_back("*", g(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s.composition.push_back({g(i), g(j), g((i + j) % m)});
  return FinCategory::validate(s);
}

}  // namespace catmag
