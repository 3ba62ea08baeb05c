#include "weyl/automorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "weyl/error.hpp"

namespace weyl {

std::string_view mode_name(Mode m) { return m == Mode::Lie ? "lie" : "assoc"; }

Mode parse_mode(std::string_view text) {
  if (text == "lie") return Mode::Lie;
  if (text == "assoc") return Mode::Assoc;
  throw Error(ErrorCode::InvalidArgument, "mode must be 'lie' or 'assoc', got '" + std::string(text) + "'");
}

namespace {

Element x_coord(const SignaturePtr& sig, std::size_t k, std::int64_t sign) {
  IntVec n(sig->ell(), 0);
  n[k] = sign;
  return Element::x(sig, n);
}

Element d_level_one(const SignaturePtr& sig, const RatVec& coeffs) {
  Element out(sig);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out += coeffs[i] * Element::d(sig, i);
  return out;
}

Element strip_constant(Element u) {
  Rational c = u.constant_term();
  if (c != 0) u -= Element::scalar(u.signature(), c);
  return u;
}

[[noreturn]] void not_aut(const std::string& why) { throw Error(ErrorCode::NotAnAutomorphism, why); }

}  // namespace

Element extend_homomorphically(const GeneratorImages& im, const Element& w) {
  if (!(*w.signature() == *im.src)) throw Error(ErrorCode::SignatureMismatch, "element is not over the map's source");
  const Signature& sig = *im.src;
  // (kind, index, exponent) → image power; kinds 0..3 = x_pos, x_neg, x_poly, d.
  std::map<std::tuple<int, std::size_t, std::int64_t>, Element> cache;
  auto pow_of = [&](int kind, std::size_t idx, std::int64_t e) -> const Element& {
    auto key = std::make_tuple(kind, idx, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const std::vector<Element>* src = kind == 0 ? &im.x_pos : kind == 1 ? &im.x_neg : kind == 2 ? &im.x_poly : &im.d;
    return cache.emplace(key, power((*src)[idx], e)).first->second;
  };

  Element out(im.dst);
  for (const auto& [m, c] : w.terms()) {
    Element img = Element::scalar(im.dst, c);
    for (std::size_t k = 0; k < sig.ell(); ++k) {
      if (m.alpha[k] > 0) img = img * pow_of(0, k, m.alpha[k]);
      if (m.alpha[k] < 0) img = img * pow_of(1, k, -m.alpha[k]);
    }
    for (std::size_t p = 0; p < sig.ell1(); ++p)
      if (m.i[p] > 0) img = img * pow_of(2, p, m.i[p]);
    for (std::size_t q = 0; q < sig.ell(); ++q)
      if (m.mu[q] > 0) img = img * pow_of(3, q, m.mu[q]);
    out += img;
  }
  return out;
}

std::vector<Element> generating_set(const SignaturePtr& sig) {
  std::vector<Element> out;
  for (std::size_t q = 0; q < sig->ell(); ++q) out.push_back(Element::d(sig, q));
  for (std::size_t p = 0; p < sig->ell1(); ++p) out.push_back(Element::x_poly(sig, p));
  for (std::size_t k = 0; k < sig->ell(); ++k) {
    out.push_back(x_coord(sig, k, 1));
    out.push_back(x_coord(sig, k, -1));
  }
  return out;
}

// ---------------------------------------------------------------- σ_τ

TauAut TauAut::identity(const Signature& sig) {
  return {BlockMatrix(Matrix::identity(sig.ell()), sig.ell1(), sig.ell2()), Character::trivial(sig.ell())};
}

GeneratorImages tau_images(const SignaturePtr& src, const SignaturePtr& dst, const BlockMatrix& G, const Character& f) {
  if (src->ell1() != dst->ell1() || src->ell2() != dst->ell2())
    throw Error(ErrorCode::SignatureMismatch, "(ell1, ell2) differ between source and target");
  if (G.ell1() != src->ell1() || G.ell2() != src->ell2())
    throw Error(ErrorCode::DimensionMismatch, "block sizes do not match the signature");
  if (f.values.size() != src->ell()) throw Error(ErrorCode::DimensionMismatch, "character needs one value per basis row");

  GeneratorImages im{src, dst, {}, {}, {}, {}};
  const Matrix ginv = G.inverse().entries();
  for (std::size_t k = 0; k < src->ell(); ++k) {
    RatVec image = src->lattice().basis().row(k) * ginv;
    auto coords = dst->lattice().coordinates(image);
    if (!coords) throw Error(ErrorCode::LatticeNotMapped, to_string(image) + " = b_k·G⁻¹ is outside the target lattice");
    IntVec neg = *coords;
    for (auto& x : neg) x = -x;
    im.x_pos.push_back(f.values[k] * Element::x(dst, *coords));
    im.x_neg.push_back(Rational(1 / f.values[k]) * Element::x(dst, neg));
  }
  const Matrix mit = G.M().inverse().transpose();
  for (std::size_t p = 0; p < src->ell1(); ++p) {
    Element row(dst);
    for (std::size_t i = 0; i < src->ell1(); ++i)
      if (mit(i, p) != 0) row += mit(i, p) * Element::x_poly(dst, i);
    im.x_poly.push_back(std::move(row));
  }
  for (std::size_t q = 0; q < src->ell(); ++q) im.d.push_back(d_level_one(dst, G.entries().col(q)));
  return im;
}

Element apply_tau(const SignaturePtr& sig, const TauAut& t, const Element& w) {
  return extend_homomorphically(tau_images(sig, sig, t.G, t.f), w);
}

TauAut tau_compose(const Signature& sig, const TauAut& a, const TauAut& b) {
  // f''(α) = f_b(α)·f_a(α·G_b⁻¹)
  const Matrix gbinv = b.G.inverse().entries();
  RatVec values(sig.ell());
  for (std::size_t k = 0; k < sig.ell(); ++k) {
    IntVec c = sig.lattice().require_coordinates(sig.lattice().basis().row(k) * gbinv);
    values[k] = b.f.values[k] * a.f.at_coords(c);
  }
  return {a.G * b.G, Character{values}};
}

TauAut tau_inverse(const Signature& sig, const TauAut& t) {
  RatVec values(sig.ell());
  for (std::size_t k = 0; k < sig.ell(); ++k) {
    IntVec c = sig.lattice().require_coordinates(sig.lattice().basis().row(k) * t.G.entries());
    values[k] = 1 / t.f.at_coords(c);
  }
  return {t.G.inverse(), Character{values}};
}

Element tau_bracket(const SignaturePtr& sig, const TauAut& t, const RatVec& v) {
  if (v.size() != sig->ell()) throw Error(ErrorCode::DimensionMismatch, "shift vector length");
  RatVec v2(v.begin() + static_cast<std::ptrdiff_t>(sig->ell1()), v.end());
  Element out(sig);
  if (sig->ell1() == 0 || sig->ell2() == 0) return out;
  RatVec c = v2 * t.G.P();
  for (std::size_t p = 0; p < sig->ell1(); ++p)
    if (c[p] != 0) out -= c[p] * Element::x_poly(sig, p);
  return out;
}

RatVec tau_of_v(const Signature& sig, const TauAut& t, const RatVec& v) {
  if (v.size() != sig.ell()) throw Error(ErrorCode::DimensionMismatch, "shift vector length");
  RatVec out;
  if (sig.ell1() > 0) {
    RatVec v1(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(sig.ell1()));
    out = v1 * t.G.M().inverse().transpose();
  }
  if (sig.ell2() > 0) {
    RatVec v2(v.begin() + static_cast<std::ptrdiff_t>(sig.ell1()), v.end());
    RatVec w = v2 * t.G.Q();
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

// ---------------------------------------------------------------- σ_u, σ_v, σ₁

InnerExp InnerExp::from(Element u) {
  if (!u.in_A()) throw Error(ErrorCode::NotInA, "exp(ad u) needs u in A");
  return {strip_constant(std::move(u))};
}

Element apply_exp_ad(const InnerExp& e, const Element& w) {
  if (!e.u.in_A()) throw Error(ErrorCode::NotInA, "exp(ad u) needs u in A");
  require_same_signature(e.u, w);
  Element out(w.signature());
  for (const auto& [m, c] : w.terms()) {
    Element term = Element::monomial(w.signature(), m, c);
    out += term;
    const std::int64_t L = level(m.mu);
    for (std::int64_t s = 1; s <= L && !term.is_zero(); ++s) {
      term = bracket(e.u, term) * Rational(1, static_cast<unsigned long>(s));
      out += term;
    }
  }
  return out;
}

Element apply_shift(const SignaturePtr& sig, const ShiftV& s, const Element& w) {
  if (s.v.size() != sig->ell()) throw Error(ErrorCode::DimensionMismatch, "shift vector length");
  GeneratorImages im{sig, sig, {}, {}, {}, {}};
  for (std::size_t k = 0; k < sig->ell(); ++k) {
    im.x_pos.push_back(x_coord(sig, k, 1));
    im.x_neg.push_back(x_coord(sig, k, -1));
  }
  for (std::size_t p = 0; p < sig->ell1(); ++p)
    im.x_poly.push_back(Element::x_poly(sig, p) + Element::scalar(sig, s.v[p]));
  for (std::size_t q = 0; q < sig->ell(); ++q) {
    Element dq = Element::d(sig, q);
    if (q >= sig->ell1()) dq += Element::scalar(sig, s.v[q]);
    im.d.push_back(std::move(dq));
  }
  return extend_homomorphically(im, w);
}

Element apply_sigma1(const Element& w) {
  const SignaturePtr& sig = w.signature();
  Element out(sig);
  for (const auto& [m, c] : w.terms()) {
    Monomial dm = unit_monomial(*sig);
    dm.mu = m.mu;
    Monomial xm = m;
    std::fill(xm.mu.begin(), xm.mu.end(), 0);
    Rational sign = level(m.mu) % 2 == 0 ? -1 : 1;
    out += Element::monomial(sig, dm, sign * c) * Element::monomial(sig, xm);
  }
  return out;
}

// ---------------------------------------------------------------- normal forms

NormalFormAut NormalFormAut::identity(const SignaturePtr& sig) {
  return {sig, TauAut::identity(*sig), InnerExp{Element(sig)}, ShiftV{RatVec(sig->ell(), Rational(0))}, 0};
}

NormalFormAut NormalFormAut::sigma1(const SignaturePtr& sig) {
  NormalFormAut a = identity(sig);
  a.eps = 1;
  return a;
}

bool operator==(const NormalFormAut& a, const NormalFormAut& b) {
  return *a.sig == *b.sig && a.tau == b.tau && a.u == b.u && a.v == b.v && a.eps == b.eps;
}

Element apply_normal_form(const NormalFormAut& a, const Element& w) {
  Element r = a.eps ? apply_sigma1(w) : w;
  r = apply_shift(a.sig, a.v, r);
  r = apply_exp_ad(a.u, r);
  return apply_tau(a.sig, a.tau, r);
}

NormalFormAut compose_normal_forms(const NormalFormAut& a, const NormalFormAut& b) {
  if (a.eps || b.eps) throw Error(ErrorCode::Sigma1NotSupported, "normal-form composition needs eps = 0 on both sides");
  if (!(*a.sig == *b.sig)) throw Error(ErrorCode::SignatureMismatch, "automorphisms of different algebras");
  const SignaturePtr& sig = a.sig;
  // σ_τσ_uσ_v ∘ σ_τ'σ_u'σ_v' = σ_{ττ'} σ_{τ'⁻¹(u) + τ'[v] + σ_{τ'(v)}(u')} σ_{τ'(v)+v'}
  RatVec moved_v = tau_of_v(*sig, b.tau, a.v.v);
  Element u = apply_tau(sig, tau_inverse(*sig, b.tau), a.u.u) + tau_bracket(sig, b.tau, a.v.v) +
              apply_shift(sig, ShiftV{moved_v}, b.u.u);
  RatVec v(sig->ell());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = moved_v[k] + b.v.v[k];
  return {sig, tau_compose(*sig, a.tau, b.tau), InnerExp::from(std::move(u)), ShiftV{v}, 0};
}

NormalFormAut inverse(const NormalFormAut& a) {
  if (a.eps) throw Error(ErrorCode::Sigma1NotSupported, "inverse in normal form needs eps = 0");
  const SignaturePtr& sig = a.sig;
  NormalFormAut neg_v = NormalFormAut::identity(sig);
  for (std::size_t k = 0; k < sig->ell(); ++k) neg_v.v.v[k] = -a.v.v[k];
  NormalFormAut neg_u = NormalFormAut::identity(sig);
  neg_u.u = InnerExp::from(-a.u.u);
  NormalFormAut tinv = NormalFormAut::identity(sig);
  tinv.tau = tau_inverse(*sig, a.tau);
  return compose_normal_forms(compose_normal_forms(neg_v, neg_u), tinv);
}

// ---------------------------------------------------------------- functional form

namespace {

GeneratorImages map_generators(const SignaturePtr& sig, const std::function<Element(const Element&)>& phi) {
  GeneratorImages im{sig, sig, {}, {}, {}, {}};
  for (std::size_t k = 0; k < sig->ell(); ++k) {
    im.x_pos.push_back(phi(x_coord(sig, k, 1)));
    im.x_neg.push_back(phi(x_coord(sig, k, -1)));
  }
  for (std::size_t p = 0; p < sig->ell1(); ++p) im.x_poly.push_back(phi(Element::x_poly(sig, p)));
  for (std::size_t q = 0; q < sig->ell(); ++q) im.d.push_back(phi(Element::d(sig, q)));
  return im;
}

// Generator images of φ∘σ₁ from those of φ.
GeneratorImages twist_by_sigma1(GeneratorImages im) {
  for (auto& e : im.x_pos) e = -e;
  for (auto& e : im.x_neg) e = -e;
  for (auto& e : im.x_poly) e = -e;
  return im;
}

Rational image_of_one(const FunctionalAut& phi) {
  const Element& one = phi.one;
  if (one.size() == 1 && one.in_FD() && one.max_level() == 0) {
    Rational c = one.constant_term();
    if (c == 1 || c == -1) return c;
  }
  not_aut("the image of 1 must be 1 or -1");
}

}  // namespace

FunctionalAut to_functional(const NormalFormAut& a, Mode mode) {
  auto phi = [&](const Element& w) { return apply_normal_form(a, w); };
  return {mode, phi(Element::one(a.sig)), map_generators(a.sig, phi)};
}

Element apply_functional(const FunctionalAut& phi, const Element& w) {
  if (image_of_one(phi) == 1) return extend_homomorphically(phi.images, w);
  return extend_homomorphically(twist_by_sigma1(phi.images), apply_sigma1(w));
}

NormalFormAut compose_via_functional(const NormalFormAut& a, const NormalFormAut& b, Mode mode) {
  if (!(*a.sig == *b.sig)) throw Error(ErrorCode::SignatureMismatch, "automorphisms of different algebras");
  auto phi = [&](const Element& w) { return apply_normal_form(a, apply_normal_form(b, w)); };
  FunctionalAut f{mode, phi(Element::one(a.sig)), map_generators(a.sig, phi)};
  return decompose_automorphism(f);
}

// ---------------------------------------------------------------- verification

VerifyReport verify_map(const SignaturePtr& sig, Mode mode, const std::function<Element(const Element&)>& phi,
                        int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  VerifyReport rep;
  rep.seed = seed;
  auto check = [&](const Element& a, const Element& b) {
    Element lhs = mode == Mode::Lie ? phi(bracket(a, b)) : phi(a * b);
    Element pa = phi(a), pb = phi(b);
    Element rhs = mode == Mode::Lie ? bracket(pa, pb) : pa * pb;
    if (lhs == rhs) return true;
    rep.passed = false;
    rep.counterexample = Counterexample{a, b, std::move(lhs), std::move(rhs)};
    return false;
  };
  const auto gens = generating_set(sig);
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (!check(a, b)) return rep;
  Sampler s(seed);
  for (int t = 0; t < trials; ++t) {
    Element a = s.element(sig), b = s.element(sig);
    ++rep.trials;
    if (!check(a, b)) return rep;
  }
  return rep;
}

VerifyReport verify_automorphism(const NormalFormAut& a, Mode mode, int trials, std::uint64_t seed) {
  return verify_map(a.sig, mode, [&](const Element& w) { return apply_normal_form(a, w); }, trials, seed);
}

VerifyReport verify_automorphism(const FunctionalAut& phi, int trials, std::uint64_t seed) {
  return verify_map(phi.signature(), phi.mode, [&](const Element& w) { return apply_functional(phi, w); }, trials,
                    seed);
}

// ---------------------------------------------------------------- decomposition

namespace {

// Some I ∈ A with ∂_q(I) = target, built term by term.
Element integrate(const SignaturePtr& sig, std::size_t q, const Element& target) {
  Element out(sig);
  const bool poly = q < sig->ell1();
  for (const auto& [m, c] : target.terms()) {
    const Rational a = alpha_vector(*sig, m)[q];
    if (a != 0) {
      // I(ī) = (x^{α,ī} − i_q I(ī−1_q))/α_q, unrolled.
      const std::int32_t top = poly ? m.i[q] : 0;
      Rational coeff = c / a;
      Monomial t = m;
      for (std::int32_t k = 0; k <= top; ++k) {
        t.i[q] = top - k;
        out.add_term(t, coeff);
        coeff *= Rational(-(top - k)) / a;
      }
    } else if (poly) {
      Monomial t = m;
      ++t.i[q];
      out.add_term(t, c / Rational(t.i[q]));
    } else {
      not_aut("derivation image has a term of degree 0 in direction " + std::to_string(q + 1) +
              " that no inner automorphism produces");
    }
  }
  return out;
}

void map_images(GeneratorImages& im, const std::function<Element(const Element&)>& f) {
  for (auto* list : {&im.x_pos, &im.x_neg, &im.x_poly, &im.d})
    for (auto& e : *list) e = f(e);
}

}  // namespace

NormalFormAut decompose_automorphism(const FunctionalAut& phi) {
  const SignaturePtr& sig = phi.signature();
  const std::size_t ell = sig->ell(), ell1 = sig->ell1();

  int eps = 0;
  GeneratorImages im = phi.images;
  if (image_of_one(phi) == -1) {
    if (phi.mode == Mode::Assoc) not_aut("an associative automorphism fixes 1");
    eps = 1;
    im = twist_by_sigma1(std::move(im));
  }

  // G from the D-parts of the derivation images.
  Matrix g(ell, ell);
  for (std::size_t q = 0; q < ell; ++q)
    for (const auto& [m, c] : im.d[q].terms()) {
      const auto lv = level(m.mu);
      if (lv == 0) continue;
      bool pure = lv == 1 && std::all_of(m.alpha.begin(), m.alpha.end(), [](auto x) { return x == 0; }) &&
                  std::all_of(m.i.begin(), m.i.end(), [](auto x) { return x == 0; });
      if (!pure) not_aut("image of d" + std::to_string(q + 1) + " is not in D + A");
      std::size_t p = static_cast<std::size_t>(std::find(m.mu.begin(), m.mu.end(), 1) - m.mu.begin());
      g(p, q) = c;
    }
  if (!BlockMatrix::has_block_shape(g, ell1) || g.determinant() == 0)
    not_aut("derivation images do not define an invertible block matrix");
  std::optional<BlockMatrix> G;
  try {
    G.emplace(g, ell1, sig->ell2());
  } catch (const Error&) {
    not_aut("derivation images do not define an invertible block matrix");
  }
  if (!aut2_membership(sig->lattice(), *G)) not_aut("the derivation matrix does not stabilize the lattice");

  const TauAut g_only{*G, Character::trivial(ell)};
  const TauAut g_inv = tau_inverse(*sig, g_only);
  map_images(im, [&](const Element& e) { return apply_tau(sig, g_inv, e); });

  // Remove the A-parts of the derivation images one direction at a time.
  Element U(sig);
  ShiftV v{RatVec(ell, Rational(0))};
  for (std::size_t q = 0; q < ell; ++q) {
    Element w = im.d[q] - Element::d(sig, q);
    if (!w.in_A()) not_aut("image of d" + std::to_string(q + 1) + " is not in D + A");
    if (q >= ell1) {
      v.v[q] = w.constant_term();
      w -= Element::scalar(sig, v.v[q]);
    }
    Element Uq = integrate(sig, q, -w);
    const InnerExp peel{-Uq};
    map_images(im, [&](const Element& e) { return apply_exp_ad(peel, e); });
    U += Uq;
  }

  RatVec fvals(ell);
  for (std::size_t k = 0; k < ell; ++k) {
    const Element& e = im.x_pos[k];
    IntVec n(ell, 0);
    n[k] = 1;
    Monomial m = unit_monomial(*sig);
    m.alpha = n;
    if (e.size() != 1 || e.coefficient(m) == 0) not_aut("image of a lattice generator is not a scaled copy of it");
    fvals[k] = e.coefficient(m);
  }
  for (std::size_t p = 0; p < ell1; ++p) v.v[p] = im.x_poly[p].constant_term();

  const TauAut f_inv{BlockMatrix(Matrix::identity(ell), ell1, sig->ell2()), [&] {
                       Character c{fvals};
                       for (auto& x : c.values) x = 1 / x;
                       return c;
                     }()};
  NormalFormAut nf{sig, TauAut{*G, Character{fvals}}, InnerExp::from(apply_tau(sig, f_inv, U)), v, eps};

  // The recovered data must reproduce every generator image.
  FunctionalAut back = to_functional(nf, phi.mode);
  if (!(back.one == phi.one) || !(back.images == phi.images))
    not_aut("generator images are not reproduced by the recovered normal form");
  return nf;
}

// ---------------------------------------------------------------- sampling

namespace {

Matrix random_unimodular(Sampler& s, std::size_t n, int ops) {
  Matrix u = Matrix::identity(n);
  for (int t = 0; t < ops && n > 1; ++t) {
    auto i = static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    Rational k = s.coin() ? 1 : -1;
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
  }
  for (std::size_t r = 0; r < n; ++r)
    if (s.coin())
      for (std::size_t c = 0; c < n; ++c) u(r, c) = -u(r, c);
  return u;
}

// Basis of Γ whose first ℓ₁ rows span Γ ∩ (ℚ^{ℓ₁} × 0).
Matrix adapted_basis(const Signature& sig) {
  const std::size_t ell = sig.ell(), ell1 = sig.ell1();
  const Matrix& b = sig.lattice().basis();
  if (ell1 == 0 || sig.ell2() == 0) return b;
  // Echelon form with the last ℓ₂ coordinates eliminated first.
  auto perm = [&](std::size_t c) { return c < sig.ell2() ? ell1 + c : c - sig.ell2(); };
  std::vector<RatVec> rows;
  for (std::size_t r = 0; r < ell; ++r) {
    RatVec row(ell);
    for (std::size_t c = 0; c < ell; ++c) row[c] = b(r, perm(c));
    rows.push_back(row);
  }
  const Matrix h = Lattice::from_generators(ell, rows).basis();
  Matrix out(ell, ell);
  for (std::size_t r = 0; r < ell; ++r) {
    std::size_t src = r < ell1 ? sig.ell2() + r : r - ell1;
    for (std::size_t c = 0; c < ell; ++c) out(r, perm(c)) = h(src, c);
  }
  return out;
}

}  // namespace

BlockMatrix random_aut2(Sampler& s, const Signature& sig, int ops) {
  const std::size_t ell = sig.ell(), ell1 = sig.ell1();
  const Matrix a = random_unimodular(s, ell1, ops);
  const Matrix d = random_unimodular(s, sig.ell2(), ops);
  Matrix u(ell, ell);
  for (std::size_t r = 0; r < ell; ++r)
    for (std::size_t c = 0; c < ell; ++c) {
      if (r < ell1 && c < ell1) u(r, c) = a(r, c);
      if (r >= ell1 && c >= ell1) u(r, c) = d(r - ell1, c - ell1);
      if (r >= ell1 && c < ell1) u(r, c) = Rational(static_cast<long>(s.uniform(-1, 1)));
    }
  const Matrix bt = adapted_basis(sig);
  return BlockMatrix(bt.inverse() * u * bt, ell1, sig.ell2());
}

Character random_character(Sampler& s, std::size_t dim) {
  static const Rational choices[] = {1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3, -3};
  Character f{RatVec(dim)};
  for (auto& x : f.values) x = choices[s.uniform(0, 7)];
  return f;
}

NormalFormAut random_normal_form(Sampler& s, const SignaturePtr& sig, bool allow_sigma1) {
  NormalFormAut a = NormalFormAut::identity(sig);
  a.tau = TauAut{random_aut2(s, *sig), random_character(s, sig->ell())};
  ElementParams p;
  p.max_terms = 2;
  p.max_level = 0;
  p.max_i_level = 2;
  a.u = InnerExp::from(s.element(sig, p));
  for (auto& x : a.v.v) {
    Rational r(static_cast<long>(s.uniform(-3, 3)), static_cast<unsigned long>(s.uniform(1, 2)));
    r.canonicalize();
    x = r;
  }
  a.eps = allow_sigma1 && s.coin() ? 1 : 0;
  return a;
}

}  // namespace weyl
