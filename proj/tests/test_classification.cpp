#include <gtest/gtest.h>

#include "weyl/classification.hpp"
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

Element mono(const SignaturePtr& sig, IntVec alpha, MultiIndex i, MultiIndex mu, Rational c = 1) {
  return Element::monomial(sig, Monomial{std::move(alpha), std::move(i), std::move(mu)}, c);
}

// Σ c_μ Π α_q^{μ_q}: the scalar by which u ∈ 𝔽[D] acts on x^α.
Rational symbol_at(const Element& u, const RatVec& alpha) {
  Rational s = 0;
  for (const auto& [m, c] : u.terms()) {
    Rational t = c;
    for (std::size_t k = 0; k < alpha.size(); ++k) t *= pow(alpha[k], m.mu[k]);
    s += t;
  }
  return s;
}

}  // namespace

TEST(Invariants, Examples) {
  auto a = integer_sig(1, 1), b = integer_sig(2, 0);
  EXPECT_TRUE(invariant_obstruction(*a, *b).has_value());
  auto c = integer_sig(0, 2);
  auto d = make_signature(0, 2, {{q(1, 2), 0}, {0, 1}});
  EXPECT_FALSE(invariant_obstruction(*c, *d).has_value());
  EXPECT_FALSE(invariant_obstruction(*a, *a).has_value());
  EXPECT_EQ(signature_invariants(*d).basis, Matrix::from_rows({{q(1, 2), 0}, {0, 1}}));
}

TEST(IsoVerify, Examples) {
  auto z2 = integer_sig(1, 1);
  IsoCandidate shear{block({{1, 0}, {1, 1}}, 1, 1), Character::trivial(2)};
  IsoVerified v = iso_verify(z2, z2, shear, 20, 1);
  EXPECT_TRUE(v.report.passed);
  EXPECT_EQ(v.images.d[0], Element::d(z2, 0) + Element::d(z2, 1));

  IsoCandidate id{block({{1, 0}, {0, 1}}, 1, 1), Character::trivial(2)};
  EXPECT_TRUE(iso_verify(z2, z2, id, 5, 1).report.passed);

  IsoCandidate dbl{block({{2, 0}, {0, 1}}, 1, 1), Character::trivial(2)};
  EXPECT_EQ(code_of([&] { iso_verify(z2, z2, dbl, 5, 1); }), ErrorCode::LatticeNotMapped);

  IsoCandidate wrong_blocks{block({{1, 0}, {0, 1}}, 2, 0), Character::trivial(2)};
  EXPECT_EQ(code_of([&] { iso_verify(z2, z2, wrong_blocks, 5, 1); }), ErrorCode::BlockShapeViolation);
  EXPECT_EQ(code_of([&] { iso_verify(z2, integer_sig(2, 0), id, 5, 1); }), ErrorCode::SignatureMismatch);
}

TEST(IsoVerify, BetweenDifferentLattices) {
  // Γ′ = Γ·H⁻¹ for a block H with non-integral entries.
  auto src = desk_sig();
  BlockMatrix h = block({{2, 0}, {q(1, 3), 3}}, 1, 1);
  std::vector<RatVec> rows;
  for (const auto& r : src->lattice().basis().row_list()) rows.push_back(r * h.inverse().entries());
  auto dst = make_signature(1, 1, rows);
  Sampler s(2);
  IsoVerified v = iso_verify(src, dst, {h, random_character(s, 2)}, 30, 2);
  EXPECT_TRUE(v.report.passed);
  EXPECT_EQ(code_of([&] { iso_verify(src, dst, {block({{1, 0}, {0, 1}}, 1, 1), Character::trivial(2)}, 5, 1); }),
            ErrorCode::LatticeNotMapped);
}

TEST(IsoVerify, RandomAut2RoundTrip) {
  auto desk = desk_sig();
  Sampler s(3);
  for (int t = 0; t < 5; ++t) {
    IsoCandidate c{random_aut2(s, *desk), random_character(s, 2)};
    EXPECT_TRUE(iso_verify(desk, desk, c, 20, 10 + t).report.passed);
  }
}

TEST(IsoSearch, Examples) {
  auto c = integer_sig(0, 2);
  auto d = make_signature(0, 2, {{q(1, 2), 0}, {0, 1}});
  IsoSearchResult r = iso_search_bounded(c, d, 1);
  ASSERT_EQ(r.kind, IsoSearchResult::Kind::Found);
  EXPECT_TRUE(iso_verify(c, d, *r.candidate, 10, 1).report.passed);
  EXPECT_EQ(r.candidate->G.entries(), Matrix::from_rows({{2, 0}, {0, 1}}));

  IsoSearchResult imp = iso_search_bounded(integer_sig(1, 1), integer_sig(2, 0), 3);
  EXPECT_EQ(imp.kind, IsoSearchResult::Kind::Impossible);
  EXPECT_EQ(imp.examined, 0U);

  auto desk = desk_sig();
  IsoSearchResult self = iso_search_bounded(desk, desk, 1);
  ASSERT_EQ(self.kind, IsoSearchResult::Kind::Found);
  EXPECT_EQ(self.candidate->G.entries(), Matrix::identity(2));
  EXPECT_EQ(self.examined, 1U);
}

TEST(IsoSearch, FindsNontrivialLatticeChange) {
  auto src = desk_sig();
  BlockMatrix h = block({{1, 0}, {1, 1}}, 1, 1);
  std::vector<RatVec> rows;
  for (const auto& r : src->lattice().basis().row_list()) rows.push_back(r * h.inverse().entries());
  auto dst = make_signature(1, 1, rows);
  ASSERT_FALSE(src->lattice() == dst->lattice());
  IsoSearchResult r = iso_search_bounded(src, dst, 2);
  ASSERT_EQ(r.kind, IsoSearchResult::Kind::Found);
  EXPECT_TRUE(iso_verify(src, dst, *r.candidate, 10, 3).report.passed);

  IsoSearchResult capped = iso_search_bounded(src, dst, 2, 1);
  EXPECT_EQ(capped.kind, IsoSearchResult::Kind::Unknown);
  EXPECT_EQ(capped.examined, 1U);
}

TEST(IsoSearch, RescaledLineFoundAtBoundOne) {
  // ℤ vs 3ℤ: U = 1 already gives G = B′⁻¹B = 1/3.
  auto z = integer_sig(1, 0);
  auto z3 = make_signature(1, 0, {{3}});
  IsoSearchResult r = iso_search_bounded(z, z3, 1);
  ASSERT_EQ(r.kind, IsoSearchResult::Kind::Found);
  EXPECT_EQ(r.candidate->G.entries(), Matrix::from_rows({{q(1, 3)}}));
}

TEST(Faithfulness, Examples) {
  auto z = integer_sig(0, 1);
  auto w1 = faithfulness_witness(Element::d(z, 0));
  ASSERT_TRUE(w1);
  EXPECT_EQ(w1->alpha, (RatVec{1}));
  EXPECT_EQ(w1->value, Element::x(z, {1}));

  auto w2 = faithfulness_witness(Element::d(z, 0, 2) - Element::d(z, 0));
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->alpha, (RatVec{2}));
  EXPECT_EQ(w2->value, q(2) * Element::x(z, {2}));

  auto w3 = faithfulness_witness(Element::one(z));
  ASSERT_TRUE(w3);
  EXPECT_EQ(w3->alpha, (RatVec{0}));

  EXPECT_EQ(code_of([&] { faithfulness_witness(Element::zero(z)); }), ErrorCode::ZeroElement);
  EXPECT_EQ(code_of([&] { faithfulness_witness(Element::x(z, {1})); }), ErrorCode::NotInFD);
}

TEST(Faithfulness, WitnessWithinBoxAndFirstInScanOrder) {
  auto desk = desk_sig();
  Sampler s(4);
  for (int t = 0; t < 40; ++t) {
    Element u = s.fd_element(desk, 4, 5);
    auto w = faithfulness_witness(u);
    ASSERT_TRUE(w) << "trial " << t;
    const auto deg = u.max_level();
    for (auto n : w->n) EXPECT_LE(n, deg);
    EXPECT_NE(symbol_at(u, w->alpha), 0);
    EXPECT_EQ(w->value, symbol_at(u, w->alpha) * Element::x(desk, w->n));
    // Every grid point before the witness (graded, then lexicographic) is a root.
    const std::int64_t total = w->n[0] + w->n[1];
    for (std::int64_t a = 0; a <= deg; ++a)
      for (std::int64_t b = 0; b <= deg; ++b) {
        bool earlier = a + b < total || (a + b == total && a < w->n[0]);
        if (earlier) EXPECT_EQ(symbol_at(u, desk->lattice().point({a, b})), 0);
      }
  }
}

TEST(Classify, Examples) {
  auto desk = desk_sig();
  EXPECT_EQ(classify_ad_behavior(Element::d(desk, 0) + Element::x(desk, {2, 0})).tag, AdTag::InDPlusA);
  EXPECT_EQ(classify_ad_behavior(Element::x(desk, {1, -1}, {2, 0})).tag, AdTag::InA);
  AdBehavior wild = classify_ad_behavior(mono(desk, {1, 0}, {0, 0}, {2, 0}));
  EXPECT_EQ(wild.tag, AdTag::Wild);
  ASSERT_TRUE(wild.growth.has_value());
  EXPECT_EQ(wild.rows.size(), 6U);
  // A level-1 term with a polynomial factor is already wild.
  EXPECT_EQ(classify_ad_behavior(mono(desk, {0, 0}, {1, 0}, {1, 0})).tag, AdTag::Wild);
}

TEST(GrowthProbe, Examples) {
  auto desk = desk_sig();
  auto rows = growth_probe(Element::x(desk, {1, 0}), mono(desk, {0, 1}, {0, 0}, {2, 0}), 3);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[0].data.max_level, 2);
  EXPECT_EQ(rows[3].data.max_level, -1);
  EXPECT_TRUE(rows[3].data.empty);

  Element xa = Element::x(desk, {1, 1});
  const Rational a1 = desk->lattice().point({1, 1})[0];
  rows = growth_probe(Element::d(desk, 0), xa, 4);
  Element cur = xa;
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(rows[static_cast<std::size_t>(k)].data.max_level, 0);
    EXPECT_EQ(cur, pow(a1, k) * xa);
    cur = bracket(Element::d(desk, 0), cur);
  }

  // Γ = ℤ, β = 1: w = x^{2β}∂², probe x^{2β}; degrees (s+2)β.
  auto z = integer_sig(0, 1);
  rows = growth_probe(mono(z, {2}, {0}, {2}), Element::x(z, {2}), 5);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(rows[static_cast<std::size_t>(k)].data.max_gamma, (IntVec{2 * (k + 1)}));
  EXPECT_EQ(strict_growth(rows), std::optional<std::string>("max_gamma"));
}

TEST(GrowthProbe, InAAnnihilatesAtLevelBound) {
  auto desk = desk_sig();
  Sampler s(5);
  for (int t = 0; t < 30; ++t) {
    Element u = s.a_element(desk);
    Element probe = s.monomial_element(desk);
    const auto L = static_cast<int>(probe.max_level());
    auto rows = growth_probe(u, probe, L + 1);
    EXPECT_TRUE(rows.back().data.empty) << "trial " << t;
  }
}

TEST(GrowthProbe, WildShapesGrow) {
  auto desk = desk_sig();
  // Case 1 shapes: top level has Γ-degree 0.
  for (const Element& w : {Element::d(desk, 0, 2), Element::d(desk, 1, 2) + Element::d(desk, 0),
                           mono(desk, {0, 0}, {1, 0}, {1, 0}), mono(desk, {0, 0}, {2, 0}, {0, 1}) + Element::d(desk, 1),
                           mono(desk, {0, 0}, {0, 0}, {1, 1}, 3)}) {
    AdBehavior b = classify_ad_behavior(w);
    EXPECT_EQ(b.tag, AdTag::Wild);
    EXPECT_TRUE(b.growth.has_value());
  }
  // Case 2 shapes: nonzero top Γ-degree, either sign.
  for (const Element& w : {mono(desk, {1, 0}, {0, 0}, {1, 0}), mono(desk, {-1, 1}, {0, 0}, {0, 2}),
                           mono(desk, {0, -1}, {1, 0}, {1, 1}) + mono(desk, {0, 0}, {0, 0}, {2, 0})}) {
    AdBehavior b = classify_ad_behavior(w);
    EXPECT_EQ(b.tag, AdTag::Wild);
    EXPECT_TRUE(b.growth.has_value());
  }
}

TEST(Filtration, LawsOnRandomPairs) {
  auto desk = desk_sig();
  Sampler s(6);
  for (int t = 0; t < 60; ++t) {
    Element a = s.element(desk), b = s.element(desk);
    FiltrationCheck f = filtration_laws(a, b);
    EXPECT_TRUE(f.gamma_ok && f.level_ok && f.i_ok) << "trial " << t;
  }
}
