// Small named algebras used by tests, examples and the CLI.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tx/algebra.hpp"

namespace tx::catalog {

AlgebraPtr field_algebra(Field f);
// k[y]/(y^2), basis {1, y}.
AlgebraPtr dual_numbers(Field f);
// Path algebra of 1 -> 2, basis {e1, e2, a}.
AlgebraPtr a2(Field f);
// Two vertices, arrows a: 1 -> 2 and b: 2 -> 1, all paths of length 2 zero.
AlgebraPtr nakayama2(Field f);
// k<x, y>/(x^2, y^2, xy, yx): local, radical square zero, not self-injective.
AlgebraPtr local_two_loops(Field f);
// k^n with orthogonal idempotent basis.
AlgebraPtr split_semisimple(Field f, std::size_t n);

// One-dimensional k^2-bimodule with (a,b).m = b m and m.(a,b) = m a; the
// trivial extension of k^2 by it is the lower-triangular 2x2 matrix algebra.
Bimodule corner_bimodule(Field f);

// Looks up "k", "D", "A2", "N2", "L2" or "k^n".  Throws on an unknown name.
AlgebraPtr by_name(const std::string& name, Field f);
std::vector<std::string> names();

// Modules of dimension at most max_dim obtained as submodules or quotients
// of A or A^2 spun from seeded random vectors.
std::vector<Module> random_modules(const AlgebraPtr& a, std::size_t count, std::size_t max_dim,
                                   std::uint64_t seed);

// Every module of dimension 1..max_dim up to isomorphism, for an algebra
// whose first `vertices` basis elements are orthogonal idempotents summing to
// 1 and whose other basis elements are paths e_t b e_s, each either an arrow
// or a product of two basis paths.  Throws when the basis has another shape
// or the search would exceed `budget` candidate representations.
std::vector<Module> enumerate_modules(const AlgebraPtr& a, std::size_t vertices, std::size_t max_dim,
                                      std::uint64_t budget = 1u << 22);

}  // namespace tx::catalog
