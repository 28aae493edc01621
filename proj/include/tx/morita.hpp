// Morita context rings with zero bimodule homomorphisms
//
//   Lambda = [ A  V ]      U a B-A bimodule, V an A-B bimodule, UV = VU = 0,
//            [ U  B ]
//
// their identification with (A x B) |x (U (+) V), and modules over Lambda as
// tuples (X, Y, f, g).
//
// Basis orders: Lambda uses (A, V, U, B), read off the matrix row by row;
// the extension uses (A, B, U, V).  Over A x B a module (X, Y) has basis X
// then Y.
#pragma once

#include <cstdint>
#include <string>

#include "tx/gorenstein.hpp"
#include "tx/trivext.hpp"

namespace tx {

struct MoritaContextData {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule u;  // B-A
  Bimodule v;  // A-B
  std::string name;
};
Validation validate_context(const MoritaContextData& d);

// U (+) V as an (A x B)-bimodule through the two projections.
Bimodule sum_bimodule(const MoritaContextData& d, const AlgebraPtr& product);

struct MoritaRing {
  MoritaContextData data;
  AlgebraPtr lambda;           // direct matrix construction
  ProductAlgebra product;      // A x B
  TrivialExtension extension;  // (A x B) |x (U (+) V)
  Matrix iso;                  // extension.total x lambda, algebra isomorphism
  Matrix iso_inverse;
  bool iso_valid = false;      // multiplicative, unital and invertible
};
// Throws std::invalid_argument when the legs do not match.
MoritaRing morita_ring(const MoritaContextData& d);

// A = B = GF(p) with U = V = 0, U = GF(p) and V = 0, and U = V = GF(p).
MoritaContextData split_context(Field f);
MoritaContextData triangular_context(Field f);
MoritaContextData cyclic_context(Field f);

// (X, Y, f, g) with f: U (x)_A X -> Y and g: V (x)_B Y -> X, against the
// bases of tensor_over(u, x) and tensor_over(v, y).
struct TupleModule {
  Module x;
  Module y;
  Matrix f;
  Matrix g;
};
// [X, Y, f, g] with f: X -> Hom_B(U, Y) and g: Y -> Hom_A(V, X), against the
// bases of hom_from_bimodule(u, y) and hom_from_bimodule(v, x).
struct CotupleModule {
  Module x;
  Module y;
  Matrix f;
  Matrix g;
};
// (W, Q, f, g) with f: Q (x)_B U -> W and g: W (x)_A V -> Q.  Q (x)_B U is
// taken as tensor_over(flip(u), as_left_opposite(q)) and likewise W (x)_A V.
struct RightTupleModule {
  RightModule w;
  RightModule q;
  Matrix f;
  Matrix g;
};

Validation validate_tuple(const MoritaRing& r, const TupleModule& t);
Validation validate_cotuple(const MoritaRing& r, const CotupleModule& t);
Validation validate_right_tuple(const MoritaRing& r, const RightTupleModule& t);

// (X, Y) as a left (resp. right) A x B-module.
Module product_module(const MoritaRing& r, const Module& x, const Module& y);
RightModule product_right_module(const MoritaRing& r, const RightModule& w, const RightModule& q);

// theta(X, Y, f, g) = ((X, Y), (g, f)).  Throws std::invalid_argument on a
// law violation.
PairModule theta(const MoritaRing& r, const TupleModule& t);
// Splits the pair along the idempotents of A x B; the result describes a
// pair isomorphic to p (equal to it when p is already in block form).
TupleModule theta_inverse(const MoritaRing& r, const PairModule& p);
CopairModule cotheta(const MoritaRing& r, const CotupleModule& t);
CotupleModule cotheta_inverse(const MoritaRing& r, const CopairModule& c);
// upsilon(W, Q, f, g) = ((W, Q), (f, g)).
RightPairModule upsilon(const MoritaRing& r, const RightTupleModule& t);
RightTupleModule upsilon_inverse(const MoritaRing& r, const RightPairModule& p);

// Modules over lambda and back, through the extension and the iso.
Module tuple_to_module(const MoritaRing& r, const TupleModule& t);
Module cotuple_to_module(const MoritaRing& r, const CotupleModule& t);
RightModule right_tuple_to_module(const MoritaRing& r, const RightTupleModule& t);
TupleModule module_to_tuple(const MoritaRing& r, const Module& m);
CotupleModule module_to_cotuple(const MoritaRing& r, const Module& m);
RightTupleModule module_to_right_tuple(const MoritaRing& r, const RightModule& m);

// Dimension of the space of tuple morphisms (alpha, beta), computed from the
// commuting squares directly.
std::size_t tuple_hom_dim(const MoritaRing& r, const TupleModule& s, const TupleModule& t);
std::size_t cotuple_hom_dim(const MoritaRing& r, const CotupleModule& s, const CotupleModule& t);
std::size_t right_tuple_hom_dim(const MoritaRing& r, const RightTupleModule& s, const RightTupleModule& t);

// The two presentation sequences of a tuple and the Gorenstein verdicts on
// its components.  "first" is the sequence whose component lives over A,
// "second" the one over B.
struct MoritaReport {
  GorensteinVerdict lhs;  // on the lambda-module
  bool first_exact = false;
  bool second_exact = false;
  GorensteinVerdict first_component;   // coker g / ker f / coker f, over A
  GorensteinVerdict second_component;  // coker f / ker g / coker g, over B
  bool rhs = false;
  bool agree = false;
  CompatibilityReport u_report;
  CompatibilityReport v_report;
  CompatibilityReport sum_report;  // on U (+) V over A x B
  CompatibilityReport zr_report;   // on (A, B, 0, 0), computed over the extension
  bool sufficiency_established = false;  // both U and V
  bool converse_established = false;     // zr_report
  // The tuple-level conditions coincide with the pair-level ones computed
  // through theta (resp. cotheta, upsilon).
  bool presentation_matches = false;
  bool consistent = false;
  std::string to_string() const;
};
MoritaReport verify_tuple_gp(const MoritaRing& r, const TupleModule& t, std::size_t bound, std::uint64_t seed = 0);
MoritaReport verify_cotuple_gi(const MoritaRing& r, const CotupleModule& t, std::size_t bound,
                               std::uint64_t seed = 0);
MoritaReport verify_right_tuple_gf(const MoritaRing& r, const RightTupleModule& t, std::size_t bound,
                                   std::uint64_t seed = 0);

}  // namespace tx
