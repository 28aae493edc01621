// Finite-dimensional algebras over GF(p), their one-sided modules and
// bimodules, Hom and tensor constructions, duality and exactness.
//
// Conventions: vectors are columns.  A left module stores one matrix per
// algebra basis element, act[i] * x = b_i . x.  A right module stores
// act[i] * x = x . b_i, which is literally a left module over the opposite
// algebra with the same matrices.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tx/linalg.hpp"

namespace tx {

class Algebra {
 public:
  // constants[(i * dim + j) * dim + k] = coefficient of b_k in b_i b_j.
  Algebra(Field f, std::size_t dim, std::vector<Elem> constants, Vec unit, std::string name = {});

  const Field& field() const { return f_; }
  std::size_t dim() const { return n_; }
  Elem c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  const std::vector<Elem>& constants() const { return c_; }
  const Vec& unit() const { return unit_; }
  const std::string& name() const { return name_; }

  Vec basis_vector(std::size_t i) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Matrix left_mult(const Vec& a) const;   // x -> a x
  Matrix right_mult(const Vec& a) const;  // x -> x a

  bool same_structure(const Algebra& o) const;
  // Text key determined by the field, constants and unit (not the name).
  std::string content_key() const;

 private:
  Field f_;
  std::size_t n_;
  std::vector<Elem> c_;
  Vec unit_;
  std::string name_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(Field f, std::size_t dim, std::vector<Elem> constants, Vec unit,
                        std::string name = {});
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct Validation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
  static Validation pass() { return {}; }
  static Validation fail(std::string m) { return {false, std::move(m)}; }
};

Validation validate_algebra(const Algebra& a);

AlgebraPtr ground_algebra(Field f);
AlgebraPtr opposite_algebra(const AlgebraPtr& a);

struct ProductAlgebra {
  AlgebraPtr algebra;
  Vec first_idempotent;   // (1, 0)
  Vec second_idempotent;  // (0, 1)
  Matrix embed_first;     // dim(a x b) x dim a, a -> (a, 0)
  Matrix embed_second;
};
// Throws std::invalid_argument on field mismatch.
ProductAlgebra product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct Arrow {
  std::size_t source;
  std::size_t target;
};
// Paths compose like functions: for paths p, q the product p.q is "q then p"
// when q ends where p starts.  Relations are arrow-index sequences in
// traversal order.  Throws when the surviving path set does not terminate.
AlgebraPtr monomial_quiver_algebra(Field f, std::size_t vertices, const std::vector<Arrow>& arrows,
                                   const std::vector<std::vector<std::size_t>>& relations,
                                   std::string name = {});

struct Module {
  AlgebraPtr ring;
  std::vector<Matrix> act;

  std::size_t dim() const { return act.empty() ? 0 : act[0].rows(); }
  const Field& field() const { return ring->field(); }
  Matrix action_of(const Vec& a) const;
};

struct RightModule {
  AlgebraPtr ring;
  std::vector<Matrix> act;

  std::size_t dim() const { return act.empty() ? 0 : act[0].rows(); }
  const Field& field() const { return ring->field(); }
  Matrix action_of(const Vec& a) const;
};

struct Bimodule {
  AlgebraPtr left_ring;
  AlgebraPtr right_ring;
  std::vector<Matrix> left_act;
  std::vector<Matrix> right_act;

  std::size_t dim() const { return left_act.empty() ? 0 : left_act[0].rows(); }
  const Field& field() const { return left_ring->field(); }
};

struct ModuleHom {
  Module source;
  Module target;
  Matrix matrix;
};

Validation validate_module(const Module& m);
Validation validate_right_module(const RightModule& m);
Validation validate_bimodule(const Bimodule& m);
Validation validate_hom(const ModuleHom& h);
bool is_module_map(const Module& s, const Module& t, const Matrix& f);

Module regular_module(const AlgebraPtr& a);
Module zero_module(const AlgebraPtr& a);
Module direct_sum(const Module& a, const Module& b);
RightModule regular_right_module(const AlgebraPtr& a);
Bimodule regular_bimodule(const AlgebraPtr& a);
Bimodule zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right);
Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

// Left leg / right leg views.
Module left_part(const Bimodule& m);
RightModule right_part(const Bimodule& m);
// A right A-module is a left A^op-module with the same matrices and back.
Module as_left_opposite(const RightModule& m);
RightModule as_right_opposite(const Module& m);
// A over B bimodule as a B^op over A^op bimodule (actions swapped).
Bimodule flip(const Bimodule& m);
// One-sided modules as bimodules over the ground field on the free side.
Bimodule as_bimodule(const RightModule& w);
Bimodule as_bimodule(const Module& x);

// Pull back along an algebra homomorphism phi: A -> B, given as a
// dim B x dim A matrix whose columns are images of basis elements.
Module restrict_scalars(const Module& x, const AlgebraPtr& a, const Matrix& phi);

struct HomSpace {
  std::size_t target_dim = 0;
  std::size_t source_dim = 0;
  Matrix basis;                     // rows: flattened target_dim x source_dim matrices, reduced echelon
  std::vector<std::size_t> pivots;  // pivot column of each basis row

  std::size_t dim() const { return basis.rows(); }
  Matrix element(std::size_t j) const;
  Matrix combine(const Vec& coeffs) const;
  Vec coords(const Matrix& f) const;
  bool contains(const Matrix& f) const;
};

// Matrices F with F * src[i] = tgt[i] * F for all i.
HomSpace intertwiners(const Field& f, std::size_t source_dim, std::size_t target_dim,
                      const std::vector<Matrix>& src, const std::vector<Matrix>& tgt);

HomSpace hom_space(const Module& m, const Module& n);
HomSpace hom_space(const RightModule& m, const RightModule& n);
HomSpace hom_space(const Bimodule& m, const Bimodule& n);

struct TensorProduct {
  Module space;  // left module over the left ring of the bimodule factor
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  Matrix proj;     // dim x (left_dim * right_dim); plain index a * right_dim + b
  Matrix section;  // (left_dim * right_dim) x dim
};

// M (x)_R X for M an (S,R)-bimodule.  Throws on leg mismatch.
TensorProduct tensor_over(const Bimodule& m, const Module& x);
// W (x)_R X as a space (module over the ground field).
TensorProduct tensor_over(const RightModule& w, const Module& x);
// M (x) f between two tensor products built from the same left factor.
Matrix tensor_map(const TensorProduct& src, const TensorProduct& tgt, const Matrix& f);
// g (x) X for a map g between left factors.
Matrix tensor_map_left(const TensorProduct& src, const TensorProduct& tgt, const Matrix& g);

struct HomModule {
  Module module;  // over the right ring of the bimodule
  HomSpace homs;  // intertwiners from the left leg of M to Y
};
// Hom_R(M, Y) with (r.f)(m) = f(m.r).
HomModule hom_from_bimodule(const Bimodule& m, const Module& y);
// Hom(M, f): Hom(M, Y) -> Hom(M, Y'), f -> f o -.
Matrix hom_functor_map(const HomModule& src, const HomModule& tgt, const Matrix& f);

struct HomIntoBimodule {
  RightModule module;  // over the right ring of N
  HomSpace homs;       // intertwiners from X to the left leg of N
};
// Hom_S(X, N) for N an (S,T)-bimodule with (phi.t)(x) = phi(x).t.
HomIntoBimodule hom_into_bimodule(const Module& x, const Bimodule& n);
// Precomposition Hom(f, N): Hom(X', N) -> Hom(X, N) for f: X -> X'.
Matrix hom_precompose_map(const HomIntoBimodule& src, const HomIntoBimodule& tgt, const Matrix& f);

RightModule dual_module(const Module& x);
Module dual_module(const RightModule& x);
Bimodule dual_bimodule(const Bimodule& m);

struct Submodule {
  Module module;
  Matrix inclusion;  // ambient x dim
};
struct QuotientModule {
  Module module;
  Matrix projection;  // dim x ambient
  Matrix section;     // ambient x dim (linear only)
};

// Throws std::invalid_argument when the subspace is not invariant.
Submodule submodule(const Module& m, const Subspace& s);
QuotientModule quotient_module(const Module& m, const Subspace& s);
Submodule kernel_module(const ModuleHom& f);
QuotientModule cokernel_module(const ModuleHom& f);
Submodule image_module(const ModuleHom& f);

bool is_exact_at(const Matrix& f, const Matrix& g);
bool is_exact_at(const ModuleHom& f, const ModuleHom& g);

// Smallest subspace containing the columns of v and stable under acts.
Subspace spin(const Matrix& v, const std::vector<Matrix>& acts);

std::optional<Matrix> find_isomorphism(const Module& a, const Module& b, std::uint64_t seed = 0);
bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed = 0);

}  // namespace tx
