#include <gtest/gtest.h>

#include "weyl/automorphism.hpp"
#include "weyl/error.hpp"

using namespace weyl;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

SignaturePtr integer_sig(std::size_t ell1, std::size_t ell2) {
  std::vector<RatVec> gens;
  for (std::size_t k = 0; k < ell1 + ell2; ++k) {
    RatVec e(ell1 + ell2, Rational(0));
    e[k] = 1;
    gens.push_back(e);
  }
  return make_signature(ell1, ell2, gens);
}

SignaturePtr desk_sig() { return make_signature(1, 1, {{1, 0}, {0, 1}, {q(1, 2), q(1, 2)}}); }

SignaturePtr wide_sig() {
  return make_signature(2, 1, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {q(1, 2), 0, q(1, 2)}});
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::InvalidArgument;
}

BlockMatrix block(std::initializer_list<RatVec> rows, std::size_t ell1, std::size_t ell2) {
  return BlockMatrix(Matrix::from_rows(rows), ell1, ell2);
}

// Two maps agree on every generator (and on 1).
void expect_same_on_generators(const SignaturePtr& sig, const auto& lhs, const auto& rhs) {
  EXPECT_EQ(lhs(Element::one(sig)), rhs(Element::one(sig)));
  for (const auto& g : generating_set(sig)) EXPECT_EQ(lhs(g), rhs(g));
}

NormalFormAut shift_only(const SignaturePtr& sig, RatVec v) {
  NormalFormAut a = NormalFormAut::identity(sig);
  a.v.v = std::move(v);
  return a;
}

NormalFormAut tau_only(const SignaturePtr& sig, TauAut t) {
  NormalFormAut a = NormalFormAut::identity(sig);
  a.tau = std::move(t);
  return a;
}

NormalFormAut inner_only(const SignaturePtr& sig, const Element& u) {
  NormalFormAut a = NormalFormAut::identity(sig);
  a.u = InnerExp::from(u);
  return a;
}

}  // namespace

TEST(ApplyTau, Examples) {
  auto desk = desk_sig();
  Sampler s(3);
  Element w = s.element(desk);
  EXPECT_EQ(apply_tau(desk, TauAut::identity(*desk), w), w);

  auto z = integer_sig(0, 1);
  TauAut flip{block({{-1}}, 0, 1), Character::trivial(1)};
  EXPECT_EQ(apply_tau(z, flip, Element::x(z, {1})), Element::x(z, {-1}));
  EXPECT_EQ(apply_tau(z, flip, Element::d(z, 0)), -Element::d(z, 0));

  TauAut scale{block({{1}}, 0, 1), Character{{2}}};
  for (std::int64_t n = -3; n <= 3; ++n)
    EXPECT_EQ(apply_tau(z, scale, Element::x(z, {n})), pow(Rational(2), n) * Element::x(z, {n}));
}

TEST(ApplyTau, PolynomialRowUsesInverseTranspose) {
  auto s20 = integer_sig(2, 0);
  TauAut t{block({{1, 1}, {0, 1}}, 2, 0), Character::trivial(2)};
  // ∂-row·G: ∂₂ ↦ ∂₁ + ∂₂. x-row·(Mᵗ)⁻¹: x^{1_[1]} ↦ x^{1_[1]} − x^{1_[2]}.
  EXPECT_EQ(apply_tau(s20, t, Element::d(s20, 0)), Element::d(s20, 0));
  EXPECT_EQ(apply_tau(s20, t, Element::d(s20, 1)), Element::d(s20, 0) + Element::d(s20, 1));
  EXPECT_EQ(apply_tau(s20, t, Element::x_poly(s20, 0)), Element::x_poly(s20, 0) - Element::x_poly(s20, 1));
  EXPECT_EQ(apply_tau(s20, t, Element::x_poly(s20, 1)), Element::x_poly(s20, 1));

  TauAut bad{block({{2, 0}, {1, 1}}, 1, 1), Character::trivial(2)};
  auto s11 = integer_sig(1, 1);
  EXPECT_EQ(code_of([&] { apply_tau(s11, bad, Element::d(s11, 0)); }), ErrorCode::LatticeNotMapped);
}

TEST(ApplyExpAd, Examples) {
  auto s10 = integer_sig(1, 0);
  InnerExp e = InnerExp::from(Element::x_poly(s10, 0));
  EXPECT_EQ(apply_exp_ad(e, Element::d(s10, 0)), Element::d(s10, 0) - Element::one(s10));

  auto desk = desk_sig();
  Element xa = Element::x(desk, {1, 1});
  RatVec a = desk->lattice().point({1, 1});
  for (std::size_t p = 0; p < 2; ++p)
    EXPECT_EQ(apply_exp_ad(InnerExp::from(xa), Element::d(desk, p)), Element::d(desk, p) - a[p] * xa);

  Sampler s(5);
  for (int t = 0; t < 10; ++t) {
    InnerExp u = InnerExp::from(s.a_element(desk));
    Element f = s.a_element(desk);
    EXPECT_EQ(apply_exp_ad(u, f), f);
  }
  EXPECT_EQ(code_of([&] { InnerExp::from(Element::d(desk, 0)); }), ErrorCode::NotInA);
}

TEST(ApplyExpAd, ConstantTermIsDropped) {
  auto desk = desk_sig();
  InnerExp e = InnerExp::from(Element::x(desk, {1, 0}) + Element::scalar(desk, 7));
  EXPECT_EQ(e.u, Element::x(desk, {1, 0}));
}

TEST(ApplyShift, Examples) {
  auto s11 = integer_sig(1, 1);
  Sampler s(6);
  Element w = s.element(s11);
  EXPECT_EQ(apply_shift(s11, ShiftV{{0, 0}}, w), w);

  ShiftV v{{3, 5}};
  EXPECT_EQ(apply_shift(s11, v, Element::x_poly(s11, 0)), Element::x_poly(s11, 0) + Element::scalar(s11, 3));
  EXPECT_EQ(apply_shift(s11, v, Element::d(s11, 1)), Element::d(s11, 1) + Element::scalar(s11, 5));
  EXPECT_EQ(apply_shift(s11, v, Element::d(s11, 0)), Element::d(s11, 0));
  for (std::int64_t a = -2; a <= 2; ++a)
    EXPECT_EQ(apply_shift(s11, v, Element::x(s11, {a, 1})), Element::x(s11, {a, 1}));
}

TEST(ApplySigma1, Examples) {
  auto desk = desk_sig();
  Element xa = Element::x(desk, {1, -1});
  EXPECT_EQ(apply_sigma1(xa), -xa);
  for (std::size_t p = 0; p < 2; ++p) EXPECT_EQ(apply_sigma1(Element::d(desk, p)), Element::d(desk, p));
  RatVec a = desk->lattice().point({1, -1});
  for (std::size_t p = 0; p < 2; ++p) {
    Element xd = xa * Element::d(desk, p);
    EXPECT_EQ(apply_sigma1(xd), xd + a[p] * xa);
  }
}

TEST(ApplySigma1, OrderTwo) {
  auto desk = desk_sig();
  Sampler s(7);
  for (int t = 0; t < 50; ++t) {
    Element w = s.element(desk);
    EXPECT_EQ(apply_sigma1(apply_sigma1(w)), w);
  }
}

TEST(ApplyExpAd, AdjointNilpotencyBound) {
  auto desk = desk_sig();
  Sampler s(8);
  for (int t = 0; t < 50; ++t) {
    Element u = s.a_element(desk);
    Element m = s.monomial_element(desk);
    const auto L = m.max_level();
    Element r = m;
    for (std::int64_t k = 0; k <= L; ++k) r = bracket(u, r);
    EXPECT_TRUE(r.is_zero()) << "trial " << t;
  }
}

TEST(Verify, FamiliesPassInAdvertisedModes) {
  auto desk = desk_sig();
  Sampler s(9);
  for (int t = 0; t < 3; ++t) {
    NormalFormAut a = random_normal_form(s, desk, false);
    for (Mode m : {Mode::Lie, Mode::Assoc}) {
      EXPECT_TRUE(verify_automorphism(tau_only(desk, a.tau), m, 15, 100 + t).passed);
      EXPECT_TRUE(verify_automorphism(inner_only(desk, a.u.u), m, 15, 200 + t).passed);
      EXPECT_TRUE(verify_automorphism(shift_only(desk, a.v.v), m, 15, 300 + t).passed);
    }
  }
}

TEST(Verify, Sigma1LieOnly) {
  auto desk = desk_sig();
  auto s1 = NormalFormAut::sigma1(desk);
  EXPECT_TRUE(verify_automorphism(s1, Mode::Lie, 30, 1).passed);

  VerifyReport bad = verify_automorphism(s1, Mode::Assoc, 30, 1);
  ASSERT_FALSE(bad.passed);
  ASSERT_TRUE(bad.counterexample.has_value());
  EXPECT_EQ(bad.counterexample->a, Element::d(desk, 0));
  EXPECT_EQ(bad.counterexample->b, Element::d(desk, 0));
  EXPECT_EQ(bad.counterexample->lhs, -Element::d(desk, 0, 2));
  EXPECT_EQ(bad.counterexample->rhs, Element::d(desk, 0, 2));

  VerifyReport id = verify_automorphism(NormalFormAut::identity(desk), Mode::Assoc, 10, 4);
  EXPECT_TRUE(id.passed);
  EXPECT_EQ(id.trials, 10);
  EXPECT_EQ(id.seed, 4U);
}

TEST(Compose, IdentityIsNeutral) {
  auto desk = desk_sig();
  Sampler s(10);
  NormalFormAut b = random_normal_form(s, desk, false);
  EXPECT_EQ(compose_normal_forms(NormalFormAut::identity(desk), b), b);
  EXPECT_EQ(compose_normal_forms(b, NormalFormAut::identity(desk)), b);
}

TEST(Compose, ConjugatingAShiftByTau) {
  // σ_τ⁻¹ σ_v σ_τ with P = (p): the ∂₁-shift p·v₂ is realised by u = −p·v₂·x^{1_[1]}.
  auto s11 = integer_sig(1, 1);
  const Rational p = 3, v2 = 5;
  TauAut t{block({{1, 0}, {p, 1}}, 1, 1), Character::trivial(2)};
  NormalFormAut conj = compose_normal_forms(inverse(tau_only(s11, t)),
                                            compose_normal_forms(shift_only(s11, {0, v2}), tau_only(s11, t)));
  EXPECT_EQ(conj.tau, TauAut::identity(*s11));
  EXPECT_EQ(conj.u.u, -(p * v2) * Element::x_poly(s11, 0));
  EXPECT_EQ(conj.v.v, (RatVec{0, v2}));
  EXPECT_EQ(tau_bracket(s11, t, {0, v2}), -(p * v2) * Element::x_poly(s11, 0));
  EXPECT_EQ(apply_normal_form(conj, Element::d(s11, 0)), Element::d(s11, 0) + Element::scalar(s11, p * v2));
}

TEST(Compose, ConjugationLawOnGenerators) {
  for (auto sig : {desk_sig(), wide_sig()}) {
    Sampler s(11);
    for (int t = 0; t < 25; ++t) {
      NormalFormAut r = random_normal_form(s, sig, false);
      TauAut tau = r.tau;
      TauAut tinv = tau_inverse(*sig, tau);
      RatVec v = r.v.v;
      // Sequential application of σ_τ⁻¹, σ_v, σ_τ against σ_{τ[v]}σ_{τ(v)}.
      auto lhs = [&](const Element& w) {
        return apply_tau(sig, tinv, apply_shift(sig, ShiftV{v}, apply_tau(sig, tau, w)));
      };
      auto rhs = [&](const Element& w) {
        return apply_exp_ad(InnerExp::from(tau_bracket(sig, tau, v)), apply_shift(sig, ShiftV{tau_of_v(*sig, tau, v)}, w));
      };
      expect_same_on_generators(sig, lhs, rhs);
    }
  }
}

TEST(Compose, GroupLawAgainstSequentialApplication) {
  for (auto sig : {desk_sig(), wide_sig()}) {
    Sampler s(12);
    for (int t = 0; t < 25; ++t) {
      NormalFormAut a = random_normal_form(s, sig, false), b = random_normal_form(s, sig, false);
      NormalFormAut ab = compose_normal_forms(a, b);
      expect_same_on_generators(
          sig, [&](const Element& w) { return apply_normal_form(ab, w); },
          [&](const Element& w) { return apply_normal_form(a, apply_normal_form(b, w)); });
    }
  }
}

TEST(Compose, InverseAndSigma1Rejection) {
  auto desk = desk_sig();
  Sampler s(13);
  for (int t = 0; t < 10; ++t) {
    NormalFormAut a = random_normal_form(s, desk, false);
    EXPECT_EQ(compose_normal_forms(a, inverse(a)), NormalFormAut::identity(desk));
    EXPECT_EQ(compose_normal_forms(inverse(a), a), NormalFormAut::identity(desk));
  }
  auto s1 = NormalFormAut::sigma1(desk);
  EXPECT_EQ(code_of([&] { compose_normal_forms(s1, s1); }), ErrorCode::Sigma1NotSupported);
  EXPECT_EQ(code_of([&] { inverse(s1); }), ErrorCode::Sigma1NotSupported);
}

TEST(Compose, ConjugatingAnInnerAutomorphism) {
  // δσ_uδ⁻¹ = σ_{δ(u)} for δ = σ_τ and δ = σ_v.
  auto desk = desk_sig();
  Sampler s(14);
  for (int t = 0; t < 15; ++t) {
    NormalFormAut r = random_normal_form(s, desk, false);
    Element u = s.a_element(desk);
    TauAut tinv = tau_inverse(*desk, r.tau);
    RatVec negv = r.v.v;
    for (auto& x : negv) x = -x;
    expect_same_on_generators(
        desk,
        [&](const Element& w) {
          return apply_tau(desk, r.tau, apply_exp_ad(InnerExp::from(u), apply_tau(desk, tinv, w)));
        },
        [&](const Element& w) { return apply_exp_ad(InnerExp::from(apply_tau(desk, r.tau, u)), w); });
    expect_same_on_generators(
        desk,
        [&](const Element& w) {
          return apply_shift(desk, r.v, apply_exp_ad(InnerExp::from(u), apply_shift(desk, ShiftV{negv}, w)));
        },
        [&](const Element& w) { return apply_exp_ad(InnerExp::from(apply_shift(desk, r.v, u)), w); });
  }
}

TEST(Functional, ApplicationMatchesNormalForm) {
  auto desk = desk_sig();
  Sampler s(15);
  for (int t = 0; t < 10; ++t) {
    NormalFormAut a = random_normal_form(s, desk, true);
    FunctionalAut f = to_functional(a, Mode::Lie);
    for (int k = 0; k < 3; ++k) {
      Element w = s.element(desk);
      EXPECT_EQ(apply_functional(f, w), apply_normal_form(a, w));
    }
  }
}

TEST(Decompose, Examples) {
  auto desk = desk_sig();
  auto id = NormalFormAut::identity(desk);
  EXPECT_EQ(decompose_automorphism(to_functional(id, Mode::Assoc)), id);
  auto s1 = NormalFormAut::sigma1(desk);
  EXPECT_EQ(decompose_automorphism(to_functional(s1, Mode::Lie)), s1);
  EXPECT_EQ(code_of([&] { decompose_automorphism(to_functional(s1, Mode::Assoc)); }), ErrorCode::NotAnAutomorphism);
}

TEST(Decompose, RoundTrip) {
  for (auto sig : {desk_sig(), wide_sig(), integer_sig(0, 2), integer_sig(2, 0)}) {
    Sampler s(16);
    for (int t = 0; t < 15; ++t) {
      NormalFormAut a = random_normal_form(s, sig, true);
      EXPECT_EQ(decompose_automorphism(to_functional(a, Mode::Lie)), a) << "trial " << t;
    }
  }
}

TEST(Decompose, RejectsNonAutomorphisms) {
  auto desk = desk_sig();
  FunctionalAut f = to_functional(NormalFormAut::identity(desk), Mode::Lie);
  FunctionalAut g = f;
  g.images.d[0] = Element::d(desk, 0, 2);
  EXPECT_EQ(code_of([&] { decompose_automorphism(g); }), ErrorCode::NotAnAutomorphism);
  g = f;
  g.one = Element::scalar(desk, 2);
  EXPECT_EQ(code_of([&] { decompose_automorphism(g); }), ErrorCode::NotAnAutomorphism);
  g = f;
  g.images.x_pos[0] = Element::x(desk, {1, 1});
  EXPECT_EQ(code_of([&] { decompose_automorphism(g); }), ErrorCode::NotAnAutomorphism);
  g = f;
  g.images.d[1] = Element::d(desk, 1) + Element::x(desk, {1, 0});  // no single u moves d2 alone
  EXPECT_EQ(code_of([&] { decompose_automorphism(g); }), ErrorCode::NotAnAutomorphism);
}

TEST(Decompose, MixedCompositionViaFunctionalForm) {
  auto desk = desk_sig();
  Sampler s(17);
  for (int t = 0; t < 10; ++t) {
    NormalFormAut a = random_normal_form(s, desk, true), b = random_normal_form(s, desk, true);
    NormalFormAut ab = compose_via_functional(a, b, Mode::Lie);
    expect_same_on_generators(
        desk, [&](const Element& w) { return apply_normal_form(ab, w); },
        [&](const Element& w) { return apply_normal_form(a, apply_normal_form(b, w)); });
    if (!a.eps && !b.eps) EXPECT_EQ(ab, compose_normal_forms(a, b));
  }
}

TEST(RandomAut2, MembersOfAut2) {
  for (auto sig : {desk_sig(), wide_sig(), integer_sig(1, 2)}) {
    Sampler s(18);
    bool nontrivial_p = false;
    for (int t = 0; t < 30; ++t) {
      BlockMatrix g = random_aut2(s, *sig);
      EXPECT_TRUE(aut2_membership(sig->lattice(), g));
      const Matrix p = g.P();
      for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < p.cols(); ++c) nontrivial_p |= p(r, c) != 0;
    }
    EXPECT_TRUE(nontrivial_p);
  }
}
