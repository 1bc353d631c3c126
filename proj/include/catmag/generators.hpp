#pragma once

#include <cstddef>

#include "catmag/category.hpp"

namespace catmag {

/// n objects "0".."n-1", identities only.
FinCategory gen_discrete(std::size_t n);
/// n objects with exactly one morphism "i->j" for every ordered pair.
FinCategory gen_indiscrete(std::size_t n);
/// 0 <= 1 <= ... <= n-1.
Poset gen_chain(std::size_t n);
/// Divisors of n under divisibility, ascending. Throws std::invalid_argument for n = 0.
Poset gen_divisors(std::size_t n);
/// One object "*" whose m endomorphisms "g0".."g{m-1}" compose as Z/mZ.
/// Throws std::invalid_argument for m = 0.
FinCategory gen_cyclic_monoid(std::size_t m);

}  // namespace catmag
