#pragma once

// Automorphisms of W in the factored form σ_τ σ_u σ_v σ₁^ε, their
// extensional presentation on generators, and the decomposition of the
// latter back into factored form.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/lattice.hpp"
#include "weyl/random.hpp"

namespace weyl {

enum class Mode { Lie, Assoc };

std::string_view mode_name(Mode m);
/// "lie" or "assoc"; throws InvalidArgument.
Mode parse_mode(std::string_view text);

/// Images of the generating set of src inside an algebra over dst:
/// x^{±b_k} for each canonical basis row b_k, x^{1_[p]} (p < ℓ₁) and ∂_q.
struct GeneratorImages {
  SignaturePtr src;
  SignaturePtr dst;
  std::vector<Element> x_pos;
  std::vector<Element> x_neg;
  std::vector<Element> x_poly;
  std::vector<Element> d;

  /// Signatures compare by value.
  friend bool operator==(const GeneratorImages& a, const GeneratorImages& b) {
    return *a.src == *b.src && *a.dst == *b.dst && a.x_pos == b.x_pos && a.x_neg == b.x_neg &&
           a.x_poly == b.x_poly && a.d == b.d;
  }
};

/// Extends generator images multiplicatively: x^{α,ī}∂^μ is factored as
/// x^α · Π(x^{1_[p]})^{i_p} · Π ∂_q^{μ_q} (ascending p and q) and the images
/// of the factors are multiplied in that order.
Element extend_homomorphically(const GeneratorImages& images, const Element& w);

/// The generators of W in sweep order: ∂_q, then x^{1_[p]}, then x^{b_k}, x^{−b_k}.
std::vector<Element> generating_set(const SignaturePtr& sig);

/// τ = (G, f): x^α ↦ f(α)x^{αG⁻¹}, ∂-row ↦ ∂-row·G, x^{1}-row ↦ x^{1}-row·(Mᵗ)⁻¹.
struct TauAut {
  BlockMatrix G;
  Character f;

  static TauAut identity(const Signature& sig);
  friend bool operator==(const TauAut&, const TauAut&) = default;
};

/// Generator images of the map defined by (G, f) from src into dst.
/// Throws LatticeNotMapped when some b_k·G⁻¹ is not in the dst lattice.
GeneratorImages tau_images(const SignaturePtr& src, const SignaturePtr& dst, const BlockMatrix& G, const Character& f);

/// σ_u = exp(ad u) for u ∈ A, stored with zero constant term.
struct InnerExp {
  Element u;

  /// Throws NotInA.
  static InnerExp from(Element u);
  friend bool operator==(const InnerExp&, const InnerExp&) = default;
};

/// σ_v: x^α fixed, x^{1_[p]} ↦ x^{1_[p]} + v_p (p < ℓ₁), ∂_q ↦ ∂_q + v_q (q ≥ ℓ₁).
struct ShiftV {
  RatVec v;

  friend bool operator==(const ShiftV&, const ShiftV&) = default;
};

Element apply_tau(const SignaturePtr& sig, const TauAut& t, const Element& w);
/// Σ_s (ad u)^s(m)/s! per monomial m, truncated at the level of m.
Element apply_exp_ad(const InnerExp& e, const Element& w);
Element apply_shift(const SignaturePtr& sig, const ShiftV& s, const Element& w);
/// x^{α,ī}∂^μ ↦ −(−∂)^μ · x^{α,ī}.
Element apply_sigma1(const Element& w);

TauAut tau_compose(const Signature& sig, const TauAut& a, const TauAut& b);
TauAut tau_inverse(const Signature& sig, const TauAut& t);

/// u-part produced when σ_v is moved across σ_τ: −(v_{ℓ₁+1..ℓ}·P)·(x^{1_[1]},…)ᵀ.
Element tau_bracket(const SignaturePtr& sig, const TauAut& t, const RatVec& v);
/// v·diag((Mᵗ)⁻¹, Q).
RatVec tau_of_v(const Signature& sig, const TauAut& t, const RatVec& v);

/// σ_τ ∘ σ_u ∘ σ_v ∘ σ₁^ε.
struct NormalFormAut {
  SignaturePtr sig;
  TauAut tau;
  InnerExp u;
  ShiftV v;
  int eps = 0;

  static NormalFormAut identity(const SignaturePtr& sig);
  static NormalFormAut sigma1(const SignaturePtr& sig);
  friend bool operator==(const NormalFormAut& a, const NormalFormAut& b);
};

Element apply_normal_form(const NormalFormAut& a, const Element& w);

/// a∘b (b applied first). Throws Sigma1NotSupported when either eps = 1.
NormalFormAut compose_normal_forms(const NormalFormAut& a, const NormalFormAut& b);
/// Throws Sigma1NotSupported when eps = 1.
NormalFormAut inverse(const NormalFormAut& a);

/// An automorphism given by its generator images and the image of 1.
struct FunctionalAut {
  Mode mode = Mode::Lie;
  Element one;
  GeneratorImages images;

  const SignaturePtr& signature() const { return images.src; }
  friend bool operator==(const FunctionalAut&, const FunctionalAut&) = default;
};

FunctionalAut to_functional(const NormalFormAut& a, Mode mode);
/// One = 1: homomorphic extension. One = −1: ψ∘σ₁ with ψ the homomorphic
/// extension of the generator images of φ∘σ₁. Other values throw NotAnAutomorphism.
Element apply_functional(const FunctionalAut& phi, const Element& w);
/// Generator-wise composition a∘b, then decomposition. Works for any eps.
NormalFormAut compose_via_functional(const NormalFormAut& a, const NormalFormAut& b, Mode mode);

struct Counterexample {
  Element a;
  Element b;
  Element lhs;  // φ(a·b) or φ([a,b])
  Element rhs;  // φ(a)·φ(b) or [φ(a),φ(b)]
};

struct VerifyReport {
  bool passed = true;
  int trials = 0;
  std::uint64_t seed = 0;
  std::optional<Counterexample> counterexample;
};

/// Checks φ on every pair of generators (∂ first), then on `trials` random pairs.
VerifyReport verify_map(const SignaturePtr& sig, Mode mode, const std::function<Element(const Element&)>& phi,
                        int trials, std::uint64_t seed);
VerifyReport verify_automorphism(const NormalFormAut& a, Mode mode, int trials, std::uint64_t seed);
VerifyReport verify_automorphism(const FunctionalAut& phi, int trials, std::uint64_t seed);

/// Recovers (τ, u, v, ε) from generator images. Throws NotAnAutomorphism.
NormalFormAut decompose_automorphism(const FunctionalAut& phi);

/// Random G ∈ Aut₂(Γ): a random block-triangular unimodular change of a basis
/// of Γ adapted to the span of the first ℓ₁ coordinates.
BlockMatrix random_aut2(Sampler& s, const Signature& sig, int ops = 3);
/// Values in {±1, ±2, ±1/2, ±3}.
Character random_character(Sampler& s, std::size_t dim);
/// eps may be 1 only when allow_sigma1 is set.
NormalFormAut random_normal_form(Sampler& s, const SignaturePtr& sig, bool allow_sigma1);

}  // namespace weyl
