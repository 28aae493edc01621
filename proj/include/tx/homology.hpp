// Complexes, minimal projective resolutions, syzygies, Ext and bounded
// homological dimensions.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tx/algebra.hpp"
#include "tx/structure.hpp"

namespace tx {

// Cochain-indexed complex X^lo -> ... -> X^hi.
struct ChainComplex {
  int lo = 0;
  std::vector<Module> terms;
  std::vector<Matrix> diffs;  // diffs[k]: terms[k] -> terms[k + 1]

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  const Module& at(int i) const { return terms.at(static_cast<std::size_t>(i - lo)); }
  const Matrix& d(int i) const { return diffs.at(static_cast<std::size_t>(i - lo)); }
};

bool squares_to_zero(const ChainComplex& c);

struct ExactnessReport {
  bool exact = true;
  std::optional<int> first_failure;  // cochain index of the first non-exact interior spot
};
// Exactness at every interior index lo < i < hi.
ExactnessReport is_exact_complex(const ChainComplex& c);

struct Resolution {
  Module module;
  std::vector<Module> terms;                      // P_0, P_1, ... (P_i sits in cochain degree -i)
  std::vector<Matrix> maps;                       // maps[0]: P_0 -> module, maps[i]: P_i -> P_{i-1}
  std::vector<Submodule> syzygies;                // syzygies[i] = Omega^i, inside P_{i-1}; syzygies[0] = module
  std::vector<std::vector<std::size_t>> summands;  // indecomposable summands of each P_i
};

// n + 1 projective terms P_0 .. P_n (stops growing once the syzygy is zero,
// padding with zero modules).
Resolution minimal_projective_resolution(const Module& m, std::size_t n, std::uint64_t seed = 0);
// Same shape but each cover carries an extra random projective summand.
Resolution padded_resolution(const Module& m, std::size_t n, std::uint64_t seed);
Module syzygy(const Module& m, std::size_t i, std::uint64_t seed = 0);

// P_n -> ... -> P_0 in cochain degrees -n .. 0 (augmentation dropped).
ChainComplex resolution_complex(const Resolution& r);

struct ExtGroup {
  std::size_t dim = 0;
  std::vector<Matrix> representatives;  // cocycles P_i -> n spanning a complement of the coboundaries
};
ExtGroup ext_from(const Resolution& r, const Module& n, std::size_t i);
ExtGroup ext(const Module& m, const Module& n, std::size_t i, std::uint64_t seed = 0);
// dims of Ext^0 .. Ext^max_i from one resolution.
std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t max_i, std::uint64_t seed = 0);

// Indecomposable summands of the successive syzygies of m, up to
// isomorphism.  levels[i] maps a class index to its multiplicity in
// Omega^i(m).  Minimal syzygies commute with direct sums, so each class is
// resolved once even when the syzygy dimensions grow.
struct SyzygyClasses {
  std::vector<Module> reps;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> levels;
  std::vector<std::optional<std::vector<std::pair<std::size_t, std::uint64_t>>>> children;
};
SyzygyClasses syzygy_classes(const Module& m, std::size_t max_level, std::uint64_t seed = 0);
// Ext^0 .. Ext^max_i via Ext^i(m, n) = Ext^1(Omega^{i-1} m, n) on summand classes.
std::vector<std::size_t> ext_dims_by_classes(const Module& m, const Module& n, std::size_t max_i,
                                             std::uint64_t seed = 0);

struct DimensionVerdict {
  enum class Kind { Finite, ExceedsBound };
  Kind kind = Kind::Finite;
  std::size_t value = 0;  // d for Finite(d), the bound for ExceedsBound

  static DimensionVerdict finite(std::size_t d) { return {Kind::Finite, d}; }
  static DimensionVerdict exceeds(std::size_t b) { return {Kind::ExceedsBound, b}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool operator==(const DimensionVerdict& o) const = default;
  std::string to_string() const;
};

std::size_t default_bound(const Algebra& a);

// Finite(d) when Omega^{d+1}(m) = 0 with d <= bound minimal; the zero module
// reports Finite(0).
DimensionVerdict pd_bounded(const Module& m, std::size_t bound, std::uint64_t seed = 0);
// Projective dimension of the dual over the opposite algebra.
DimensionVerdict id_bounded(const Module& m, std::size_t bound, std::uint64_t seed = 0);
// Finitely generated flat modules are projective here, so this is pd.
DimensionVerdict fd_bounded(const Module& m, std::size_t bound, std::uint64_t seed = 0);

DimensionVerdict pd_bounded(const RightModule& m, std::size_t bound, std::uint64_t seed = 0);
DimensionVerdict id_bounded(const RightModule& m, std::size_t bound, std::uint64_t seed = 0);
DimensionVerdict fd_bounded(const RightModule& m, std::size_t bound, std::uint64_t seed = 0);

// Hom(C, q): term at degree -i is Hom(X^i, q) as a space over the ground field.
ChainComplex hom_complex(const ChainComplex& c, const Module& q);
// Hom(q, C): term at degree i is Hom(q, X^i).
ChainComplex hom_complex(const Module& q, const ChainComplex& c);
// b (x) C over the right ring of b, a complex of left modules over its left ring.
ChainComplex tensor_complex(const Bimodule& b, const ChainComplex& c);
ChainComplex tensor_complex(const RightModule& w, const ChainComplex& c);

// Matrix of f -> f o d from Hom(Y, q) to Hom(X, q) for d: X -> Y.
Matrix precompose_matrix(const HomSpace& from, const HomSpace& to, const Matrix& d);
// Matrix of f -> d o f from Hom(q, X) to Hom(q, Y).
Matrix postcompose_matrix(const HomSpace& from, const HomSpace& to, const Matrix& d);

}  // namespace tx
