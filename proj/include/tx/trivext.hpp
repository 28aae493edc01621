// Trivial extensions R |x M, modules over them presented as pairs (X, alpha)
// with alpha: M (x)_R X -> X or copairs [Y, beta] with beta: Y -> Hom_R(M, Y),
// the functors T, U, Z, C, H, K between these and R-modules, and the
// structural isomorphisms and exact sequences relating them.
//
// The total algebra has basis (R-basis, M-basis) in that order.  alpha is
// stored against the basis of tensor_over(M, X) and beta against the basis
// of hom_from_bimodule(M, Y), both of which are canonical for the given
// module.
#pragma once

#include <cstdint>
#include <optional>

#include "tx/algebra.hpp"
#include "tx/homology.hpp"

namespace tx {

struct TrivialExtension {
  AlgebraPtr base;
  Bimodule bimodule;
  AlgebraPtr total;
  Matrix embed_base;      // total x base, r -> (r, 0)
  Matrix embed_bimodule;  // total x M, m -> (0, m)
  Matrix project_base;    // base x total, (r, m) -> r; an algebra homomorphism
};

// Throws std::invalid_argument unless both legs of m are r.
TrivialExtension trivial_extension(const AlgebraPtr& r, const Bimodule& m);
// R^op |x flip(M); its total algebra has the same structure constants as
// the opposite of the total algebra, so right modules become left pairs.
TrivialExtension opposite_extension(const TrivialExtension& t);

struct PairModule {
  Module x;
  Matrix alpha;  // dim X x dim(M (x) X)
};
struct CopairModule {
  Module y;
  Matrix beta;  // dim Hom(M, Y) x dim Y
};
// Right module X over R with alpha: X (x)_R M -> X, stored as the left pair
// over opposite_extension(t) it corresponds to.
struct RightPairModule {
  RightModule x;
  Matrix alpha;  // against tensor_over(flip(M), as_left_opposite(X))
};

Validation validate_pair(const TrivialExtension& t, const PairModule& p);
Validation validate_copair(const TrivialExtension& t, const CopairModule& c);
Validation validate_right_pair(const TrivialExtension& t, const RightPairModule& p);

// M (x) alpha : M (x) M (x) X -> M (x) X.
Matrix tensor_alpha(const TrivialExtension& t, const PairModule& p);
// beta_* : Hom(M, Y) -> Hom(M, Hom(M, Y)).
Matrix hom_beta(const TrivialExtension& t, const CopairModule& c);

// Throws std::invalid_argument on a law violation.
Module pair_to_module(const TrivialExtension& t, const PairModule& p);
PairModule module_to_pair(const TrivialExtension& t, const Module& m);
Module copair_to_module(const TrivialExtension& t, const CopairModule& c);
CopairModule module_to_copair(const TrivialExtension& t, const Module& m);
RightModule right_pair_to_module(const TrivialExtension& t, const RightPairModule& p);
RightPairModule module_to_right_pair(const TrivialExtension& t, const RightModule& m);
PairModule as_left_pair(const TrivialExtension& t, const RightPairModule& p);
RightPairModule as_right_pair(const TrivialExtension& t, const PairModule& p_over_opposite);

PairModule functor_T(const TrivialExtension& t, const Module& x);
CopairModule functor_H(const TrivialExtension& t, const Module& y);
PairModule functor_Z_pair(const TrivialExtension& t, const Module& x);
CopairModule functor_Z_copair(const TrivialExtension& t, const Module& y);
Module functor_U(const PairModule& p);
Module functor_U(const CopairModule& c);
QuotientModule functor_C(const TrivialExtension& t, const PairModule& p);
Submodule functor_K(const TrivialExtension& t, const CopairModule& c);

// T(f) = diag(f, M (x) f) and H(f) = diag(Hom(M, f), f).
Matrix functor_T_map(const TrivialExtension& t, const Module& x, const Module& x2, const Matrix& f);
Matrix functor_H_map(const TrivialExtension& t, const Module& y, const Module& y2, const Matrix& f);
// Induced maps on cokernels of alpha and kernels of beta.
Matrix functor_C_map(const TrivialExtension& t, const PairModule& p, const PairModule& p2, const Matrix& f);
Matrix functor_K_map(const TrivialExtension& t, const CopairModule& c, const CopairModule& c2, const Matrix& f);

struct ProjectiveClassification {
  Module p;    // projective R-module
  Matrix iso;  // module of T(p) -> module of the pair
};
std::optional<ProjectiveClassification> classify_projective(const TrivialExtension& t, const PairModule& pair,
                                                            std::uint64_t seed = 0);
struct InjectiveClassification {
  Module e;    // injective R-module
  Matrix iso;  // module of H(e) -> module of the copair
};
std::optional<InjectiveClassification> classify_injective(const TrivialExtension& t, const CopairModule& c,
                                                          std::uint64_t seed = 0);

struct ShortExactSequence {
  Module left, middle, right;  // modules over the total algebra
  Matrix inclusion;            // left -> middle
  Matrix projection;           // middle -> right
  bool exact = false;          // mono, epi and exact in the middle, all maps module maps
};
// 0 -> Z(im alpha) -> (X, alpha) -> Z(coker alpha) -> 0
ShortExactSequence ses_of_pair(const TrivialExtension& t, const PairModule& p);
// 0 -> Z(ker beta) -> [Y, beta] -> Z(im beta) -> 0
ShortExactSequence ses_of_copair(const TrivialExtension& t, const CopairModule& c);

// delta: M (x) coker(alpha) -> X with delta (M (x) rho) = alpha.
ModuleHom induced_delta(const TrivialExtension& t, const PairModule& p);
// gamma: Y -> Hom(M, ker beta) with iota_* gamma = beta.
ModuleHom induced_gamma(const TrivialExtension& t, const CopairModule& c);

struct IsoWitness {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix map;  // target_dim x source_dim
  bool invertible = false;
};
// Z(W) (x)_{R |x M} (X, alpha) -> W (x)_R coker(alpha), spaces over the ground field.
IsoWitness tensor_iso_with_cokernel(const TrivialExtension& t, const RightModule& w, const PairModule& p);
// Hom_R(X, ker beta) -> Hom_{R |x M}(Z(X), [Y, beta]), f -> iota f.
IsoWitness hom_iso_with_kernel(const TrivialExtension& t, const Module& x, const CopairModule& c);

// R as a total-total bimodule with M acting as zero on both sides.
Bimodule zr_bimodule(const TrivialExtension& t);
// Z(W) for a right R-module W, as a right module over the total algebra.
RightModule inflate_right(const TrivialExtension& t, const RightModule& w);

}  // namespace tx
