#pragma once

// Isomorphism testing between algebras, the faithfulness witness for the
// action of 𝔽[D] on A, and the local finiteness classifier with its probes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyl/automorphism.hpp"

namespace weyl {

struct SignatureInvariants {
  std::size_t ell1;
  std::size_t ell2;
  Matrix basis;
};

SignatureInvariants signature_invariants(const Signature& sig);

/// A reason the two algebras cannot be isomorphic, if the invariants differ.
std::optional<std::string> invariant_obstruction(const Signature& src, const Signature& dst);

struct IsoCandidate {
  BlockMatrix G;
  Character f;
};

struct IsoVerified {
  GeneratorImages images;
  VerifyReport report;
};

/// Builds x^α ↦ f(α)x′^{αG⁻¹}, ∂-row ↦ ∂′-row·G, x^{1}-row ↦ x′^{1}-row·(Mᵗ)⁻¹
/// and checks it on all generator pairs plus `trials` random products.
/// Throws SignatureMismatch, BlockShapeViolation, LatticeNotMapped or
/// HomomorphismCounterexample.
IsoVerified iso_verify(const SignaturePtr& src, const SignaturePtr& dst, const IsoCandidate& cand, int trials,
                       std::uint64_t seed);

struct IsoSearchResult {
  enum class Kind { Found, Impossible, Unknown } kind;
  std::optional<IsoCandidate> candidate;
  std::string reason;
  std::uint64_t examined = 0;
};

std::string_view kind_name(IsoSearchResult::Kind k);

/// Walks integer matrices U with entries in [−bound, bound] by distance
/// Σ|U − I| and then lexicographically; for unimodular U it tries
/// G = B′⁻¹U⁻¹B (so that B·G⁻¹ = U·B′). Stops with Unknown after `cap`
/// matrices.
IsoSearchResult iso_search_bounded(const SignaturePtr& src, const SignaturePtr& dst, int bound,
                                   std::uint64_t cap = 2'000'000, int trials = 20, std::uint64_t seed = 1);

struct FaithfulnessWitness {
  IntVec n;      // α = Σ n_q b_q
  RatVec alpha;
  Element value;  // θ(u)(x^α)
};

/// Scans 0 ≤ n_q ≤ deg(u) by total degree, then lexicographically.
/// Throws ZeroElement or NotInFD. Returns nullopt only if the scan is exhausted.
std::optional<FaithfulnessWitness> faithfulness_witness(const Element& u);

struct GrowthRow {
  int step = 0;
  FiltrationData data;
};

/// (ad w)^s(probe) for s = 0..steps.
std::vector<GrowthRow> growth_probe(const Element& w, const Element& probe, int steps);

/// Which filtration measure moves strictly at every step, if any:
/// "level", "i_level", "max_gamma" (up) or "min_gamma" (down).
std::optional<std::string> strict_growth(const std::vector<GrowthRow>& rows);

enum class AdTag { InA, InDPlusA, Wild };

std::string_view tag_name(AdTag t);

struct AdBehavior {
  AdTag tag;
  std::optional<Element> probe;
  std::vector<GrowthRow> rows;
  std::optional<std::string> growth;
};

/// Syntactic tag; wild elements get the first probe from the candidate list
/// (x^{2β}, then the lattice generators) that grows for `steps` steps.
AdBehavior classify_ad_behavior(const Element& w, int steps = 5);

/// Candidate probes for a wild element in the order they are tried.
std::vector<Element> wild_probes(const Element& w);

struct FiltrationCheck {
  bool gamma_ok = true;   // Γ-degrees of [a,b] stay within the sums of those of a and b
  bool level_ok = true;   // level([a,b]) ≤ level(a) + level(b) − 1 when both levels ≥ 1
  // [∂^μ, x^{0,ī}] only has ī-degrees below ī; μ from the last term of a, ī from the last term of b.
  bool i_ok = true;
};

FiltrationCheck filtration_laws(const Element& a, const Element& b);

}  // namespace weyl
