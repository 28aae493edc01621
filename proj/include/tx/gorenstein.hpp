// Gorenstein projective, injective and flat deciders, sufficient checks for
// (co)compatible bimodules, complete resolution windows and the lifted
// resolutions of pairs and copairs over a trivial extension.
//
// A finitely generated module g over a finite-dimensional algebra A is
// Gorenstein projective exactly when it is totally reflexive: Ext^i(g, A) = 0
// and Ext^i(g*, A) = 0 for i >= 1 and g -> g** is invertible.  The checks
// below test this up to a bound and certify when the algebra's regime makes
// the bound conclusive.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tx/homology.hpp"
#include "tx/trivext.hpp"

namespace tx {

enum class Answer { CertifiedYes, CertifiedNo, ProbableYes };
std::string to_string(Answer a);

struct Regime {
  enum class Kind { SelfInjective, IwanagaGorenstein, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t d_left = 0;   // id of the regular left module
  std::size_t d_right = 0;  // id of the regular right module
  std::string to_string() const;
  bool operator==(const Regime& o) const = default;
};
// Cached per algebra content, bound and seed.
Regime gorenstein_regime(const AlgebraPtr& a, std::size_t bound, std::uint64_t seed = 0);

struct GorensteinVerdict {
  enum class Reason {
    Projective,
    SelfInjective,
    IwanagaGorenstein,
    Battery,              // bounded test passed, regime inconclusive
    ExtNonvanishing,      // Ext^i(g, A) != 0
    DualExtNonvanishing,  // Ext^i(g*, A) != 0 over A^op
    BidualityDefect,
  };
  Answer answer = Answer::ProbableYes;
  Reason reason = Reason::Battery;
  Regime regime;
  std::size_t bound = 0;
  std::size_t ext_index = 0;  // witness degree for the two Ext reasons
  std::size_t ext_dim = 0;
  std::size_t biduality_rank = 0;
  std::size_t module_dim = 0;

  bool certified_yes() const { return answer == Answer::CertifiedYes; }
  bool certified_no() const { return answer == Answer::CertifiedNo; }
  bool positive() const { return answer != Answer::CertifiedNo; }
  std::string to_string() const;
};
std::string to_string(GorensteinVerdict::Reason r);

GorensteinVerdict gp_check(const Module& g, std::size_t bound, std::uint64_t seed = 0);
// gp_check of the dual over the opposite algebra.
GorensteinVerdict gi_check(const Module& y, std::size_t bound, std::uint64_t seed = 0);
// gi_check of the linear dual, a left module over the same algebra.
GorensteinVerdict gf_check_right(const RightModule& x, std::size_t bound, std::uint64_t seed = 0);

// g* = Hom_A(g, A) as a left A^op-module and the evaluation g -> g**.
struct Biduality {
  Module dual;    // over A^op
  Module bidual;  // over A
  Matrix eval;    // bidual.dim() x g.dim()
  bool invertible = false;
};
Biduality biduality(const Module& g);

// P^{-w} -> ... -> P^w with g = ker d^0 = im d^{-1}.  The left half is a
// minimal projective resolution; the right half iterates left
// add(A)-approximations g -> A^n built from generators of Hom(g, A).
struct CompleteResolutionWindow {
  ChainComplex complex;
  Matrix inclusion;  // g -> P^0
  Matrix cover;      // P^{-1} -> g, inclusion * cover = d^{-1}
  bool exact = false;
  bool hom_exact = false;  // Hom(-, Q) exact for every projective indecomposable Q
  bool ok() const { return exact && hom_exact; }
};
// nullopt when some approximation fails to be injective (g not torsionless
// along the way), which rules out Gorenstein projectivity.
std::optional<CompleteResolutionWindow> complete_resolution_window(const Module& g, std::size_t window,
                                                                   std::uint64_t seed = 0);

enum class Sufficiency { None, FiniteFlatAndProjective, FiniteFlatAndInjective };
std::string to_string(Sufficiency s);

// Only the finite-dimension sufficient criteria are evaluated; None means
// "not established", never "refuted".
struct CompatibilityReport {
  bool cocompatible = false;  // which notion was asked for
  Sufficiency via = Sufficiency::None;
  DimensionVerdict fd_right;
  DimensionVerdict pd_left;
  DimensionVerdict id_left;
  bool established() const { return via != Sufficiency::None; }
  std::string to_string() const;
};
// fd(N_B) < oo together with pd(_A N) < oo or id(_A N) < oo.
CompatibilityReport compatibility_report(const Bimodule& n, std::size_t bound, std::uint64_t seed = 0);
CompatibilityReport cocompatibility_report(const Bimodule& n, std::size_t bound, std::uint64_t seed = 0);

// Conditions on the presentation that characterize Gorenstein modules over
// the extension when the bimodule hypotheses hold.
struct PairHypotheses {
  bool middle_exact = false;  // M (x) M (x) X -> M (x) X -> X
  GorensteinVerdict coker_verdict;
  bool hold() const { return middle_exact && coker_verdict.positive(); }
};
PairHypotheses pair_hypotheses(const TrivialExtension& t, const PairModule& p, std::size_t bound,
                               std::uint64_t seed = 0);
struct CopairHypotheses {
  bool middle_exact = false;  // Y -> Hom(M, Y) -> Hom(M, Hom(M, Y))
  GorensteinVerdict kernel_verdict;
  bool hold() const { return middle_exact && kernel_verdict.positive(); }
};
CopairHypotheses copair_hypotheses(const TrivialExtension& t, const CopairModule& c, std::size_t bound,
                                   std::uint64_t seed = 0);
// X (x) M (x) M -> X (x) M -> X exact and coker(alpha) Gorenstein flat.
PairHypotheses right_pair_hypotheses(const TrivialExtension& t, const RightPairModule& p, std::size_t bound,
                                     std::uint64_t seed = 0);

struct LiftedResolution {
  ChainComplex complex;  // modules over the total algebra; T(P^i) for pairs, duals of those for copairs
  std::vector<Module> base_terms;  // P^i over the base (for copairs, over the opposite base)
  Matrix kernel_witness;  // pair -> T(P^0) onto ker g^0; for copairs, copair -> term 0 onto ker
  Matrix cover_witness;   // T(P^{-1}) -> pair onto; for copairs, term -1 -> copair onto
  bool exact = false;
  bool terms_classified = false;  // every term is T(P) (resp. H(E)) of a projective (injective)
  bool kernel_matches = false;
  bool hom_exact_T = false;  // Hom(-, T(Q)) exact; for copairs Hom(H(Q), -)
  bool hom_exact_Z = false;  // Hom(-, Z(Q)) exact; for copairs Hom(Z(Q), -)
  bool ok() const { return exact && terms_classified && kernel_matches && hom_exact_T && hom_exact_Z; }
};
// Throws std::domain_error when the hypotheses fail or a lifting step has no
// solution.
LiftedResolution build_pair_complete_resolution(const TrivialExtension& t, const PairModule& p, std::size_t window,
                                                std::size_t bound, std::uint64_t seed = 0);
// Dual construction, carried out on the dual pair over the opposite extension.
LiftedResolution build_copair_complete_coresolution(const TrivialExtension& t, const CopairModule& c,
                                                    std::size_t window, std::size_t bound, std::uint64_t seed = 0);

// Both sides of a characterization over the extension together with the
// status of its bimodule hypotheses.
struct EquivalenceReport {
  GorensteinVerdict lhs;  // verdict on the total module
  bool middle_exact = false;
  GorensteinVerdict component;  // verdict on coker(alpha) or ker(beta)
  bool rhs = false;
  bool agree = false;
  CompatibilityReport bimodule_report;  // on M
  CompatibilityReport zr_report;        // on Z(R) over the total algebra
  bool hypotheses_established = false;
  // Each implication whose hypothesis is established holds on this instance.
  bool consistent = false;
  std::string to_string() const;
};
EquivalenceReport verify_pair_equivalence(const TrivialExtension& t, const PairModule& p, std::size_t bound,
                                          std::uint64_t seed = 0);
EquivalenceReport verify_copair_equivalence(const TrivialExtension& t, const CopairModule& c, std::size_t bound,
                                            std::uint64_t seed = 0);
EquivalenceReport verify_right_pair_equivalence(const TrivialExtension& t, const RightPairModule& p,
                                                std::size_t bound, std::uint64_t seed = 0);

}  // namespace tx
