// Composition series, simples, radicals, projective indecomposables,
// projective covers and injective envelopes.
//
// Results that depend only on the algebra (simples, projective
// indecomposables) are memoized per algebra structure and seed.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tx/algebra.hpp"

namespace tx {

struct CompositionSeries {
  std::vector<Module> factors;     // factors[i] = filtration[i+1] / filtration[i]
  std::vector<Subspace> filtration;  // 0 = F_0 < F_1 < ... < F_n = m, as subspaces of m
};

// A proper nonzero invariant subspace, or nullopt when m is simple (or zero).
std::optional<Subspace> proper_submodule(const Module& m, std::uint64_t seed = 0);
bool is_simple(const Module& m, std::uint64_t seed = 0);

CompositionSeries chop(const Module& m, std::uint64_t seed = 0);

// Pairwise non-isomorphic simple modules, one per composition factor class
// of the regular module.
const std::vector<Module>& simples(const AlgebraPtr& a, std::uint64_t seed = 0);
// Index into simples(a) of the class of s; throws if s is not simple.
std::size_t simple_index(const Module& s, std::uint64_t seed = 0);
// Multiplicity of each simple of the algebra as a composition factor.
std::vector<std::size_t> composition_multiplicities(const Module& m, std::uint64_t seed = 0);

Submodule radical_of_module(const Module& m, std::uint64_t seed = 0);
QuotientModule top_of_module(const Module& m, std::uint64_t seed = 0);

// Lifts an idempotent modulo the nilpotent ideal n (a subspace of A).
// Throws std::invalid_argument when e_bar^2 - e_bar is not in n or the
// iteration does not stabilize (n not nilpotent).
Vec lift_idempotent(const Algebra& a, const Vec& e_bar, const Subspace& n);

struct Indecomposable {
  Module projective;
  Module top;                // simple, equal to simples(a)[index]
  std::size_t multiplicity;  // number of copies in the regular module
};
// Ordered like simples(a).
const std::vector<Indecomposable>& projective_indecomposables(const AlgebraPtr& a, std::uint64_t seed = 0);

// Splits m into indecomposable summands; each entry is an inclusion matrix
// (m.dim() x summand dim) whose columns span an invariant complement piece.
std::vector<Submodule> decompose(const Module& m, std::uint64_t seed = 0);

struct ProjectivePresentation {
  Module module;
  Module cover;
  Matrix epi;                        // module.dim() x cover.dim()
  Submodule kernel;                  // inside cover
  std::vector<std::size_t> summands;  // indecomposable index of each direct summand, in order
};

ProjectivePresentation projective_cover(const Module& m, std::uint64_t seed = 0);

// Direct sum of projective indecomposables given by index.
Module projective_from_summands(const AlgebraPtr& a, const std::vector<std::size_t>& summands,
                                std::uint64_t seed = 0);

struct InjectiveEnvelope {
  Module envelope;
  Matrix mono;  // envelope.dim() x m.dim()
};
InjectiveEnvelope injective_envelope(const Module& m, std::uint64_t seed = 0);

// Duals of the projective indecomposables of A^op, ordered like simples(A^op).
std::vector<Module> injective_indecomposables(const AlgebraPtr& a, std::uint64_t seed = 0);

bool is_projective(const Module& m, std::uint64_t seed = 0);
bool is_injective(const Module& m, std::uint64_t seed = 0);

// Module over A^op corresponding to the linear dual of m, and back.
Module dual_over_opposite(const Module& m);
// Interprets a module over A^op as a module over ring (which must be the
// opposite of its ring) after dualizing.
Module dual_from_opposite(const Module& m, const AlgebraPtr& ring);

}  // namespace tx
