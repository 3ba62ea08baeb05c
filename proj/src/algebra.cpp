#include "weyl/algebra.hpp"

#include <algorithm>
#include <utility>

#include "weyl/error.hpp"
#include "weyl/index_poly.hpp"

namespace weyl {

std::int64_t level(const MultiIndex& mu) {
  std::int64_t s = 0;
  for (auto x : mu) s += x;
  return s;
}

namespace {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Odometer over all λ with 0 ≤ λ ≤ bound componentwise.
bool next_below(MultiIndex& lambda, const MultiIndex& bound) {
  for (std::size_t p = 0; p < lambda.size(); ++p) {
    if (lambda[p] < bound[p]) {
      ++lambda[p];
      return true;
    }
    lambda[p] = 0;
  }
  return false;
}

void require_length(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "multi-indices of different lengths");
}

}  // namespace

Integer multi_binomial(const MultiIndex& mu, const MultiIndex& nu) {
  require_length(mu, nu);
  Integer out = 1;
  for (std::size_t p = 0; p < mu.size() && out != 0; ++p) out *= binomial(mu[p], nu[p]);
  return out;
}

std::strong_ordering total_order_cmp(const MultiIndex& mu, const MultiIndex& nu) {
  require_length(mu, nu);
  if (auto c = level(mu) <=> level(nu); c != 0) return c;
  for (std::size_t p = 0; p < mu.size(); ++p)
    if (auto c = mu[p] <=> nu[p]; c != 0) return c;
  return std::strong_ordering::equal;
}

Integer alternating_binomial_sum(const MultiIndex& mu, const MultiIndex& nu) {
  require_length(mu, nu);
  Integer sum = 0;
  MultiIndex lam(mu.size(), 0);
  do {
    MultiIndex shift(mu.size()), top(mu.size());
    for (std::size_t p = 0; p < mu.size(); ++p) {
      shift[p] = nu[p] - lam[p];
      top[p] = mu[p] + lam[p] - nu[p];
    }
    Integer first = multi_binomial(mu, shift);
    if (first == 0) continue;
    Integer second = 1;
    for (std::size_t p = 0; p < mu.size(); ++p) second *= binomial(top[p], lam[p]);
    Integer term = first * second;
    sum += (level(lam) % 2 == 0) ? term : Integer(-term);
  } while (next_below(lam, mu));
  return sum;
}

std::strong_ordering gamma_cmp(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Signature::Signature(std::size_t ell1, std::size_t ell2, Lattice lattice)
    : ell1_(ell1), ell2_(ell2), lattice_(std::move(lattice)) {
  if (ell1 + ell2 == 0) throw Error(ErrorCode::InvalidArgument, "ell1 + ell2 must be positive");
  if (lattice_.ambient_dim() != ell1 + ell2)
    throw Error(ErrorCode::DimensionMismatch, "lattice ambient dimension differs from ell1 + ell2");
}

SignaturePtr make_signature(std::size_t ell1, std::size_t ell2, const std::vector<RatVec>& gamma_generators) {
  return std::make_shared<const Signature>(ell1, ell2, Lattice::from_generators(ell1 + ell2, gamma_generators));
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (auto c = gamma_cmp(a.alpha, b.alpha); c != 0) return c < 0;
  if (auto c = total_order_cmp(a.i, b.i); c != 0) return c < 0;
  return total_order_cmp(a.mu, b.mu) < 0;
}

Monomial unit_monomial(const Signature& sig) {
  return {IntVec(sig.ell(), 0), MultiIndex(sig.ell(), 0), MultiIndex(sig.ell(), 0)};
}

RatVec alpha_vector(const Signature& sig, const Monomial& m) { return sig.lattice().point(m.alpha); }

Element Element::scalar(const SignaturePtr& sig, const Rational& c) {
  Element e(sig);
  e.add_term(unit_monomial(*sig), c);
  return e;
}

Element Element::monomial(const SignaturePtr& sig, Monomial m, const Rational& c) {
  const std::size_t n = sig->ell();
  if (m.alpha.size() != n || m.i.size() != n || m.mu.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "monomial index length differs from ell");
  for (std::size_t p = 0; p < n; ++p) {
    if (m.mu[p] < 0 || m.i[p] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in monomial");
    if (p >= sig->ell1() && m.i[p] != 0)
      throw Error(ErrorCode::InvalidArgument, "polynomial degree outside the first ell1 slots");
  }
  Element e(sig);
  e.add_term(m, c);
  return e;
}

Element Element::x(const SignaturePtr& sig, const IntVec& alpha_coords, const MultiIndex& i) {
  Monomial m = unit_monomial(*sig);
  m.alpha = alpha_coords;
  if (!i.empty()) m.i = i;
  return monomial(sig, std::move(m));
}

Element Element::x_poly(const SignaturePtr& sig, std::size_t p) {
  if (p >= sig->ell1()) throw Error(ErrorCode::InvalidArgument, "x^{1_[p]} needs p < ell1");
  Monomial m = unit_monomial(*sig);
  m.i[p] = 1;
  return monomial(sig, std::move(m));
}

Element Element::d(const SignaturePtr& sig, std::size_t q, std::int32_t power) {
  if (q >= sig->ell()) throw Error(ErrorCode::InvalidArgument, "derivation index out of range");
  Monomial m = unit_monomial(*sig);
  m.mu[q] = power;
  return monomial(sig, std::move(m));
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::in_A() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return level(t.first.mu) == 0; });
}

bool Element::in_FD() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.alpha.begin(), t.first.alpha.end(), [](auto a) { return a == 0; }) &&
           level(t.first.i) == 0;
  });
}

Rational Element::constant_term() const { return coefficient(unit_monomial(*sig_)); }

std::int64_t Element::max_level() const {
  std::int64_t out = -1;
  for (const auto& [m, c] : terms_) out = std::max(out, level(m.mu));
  return out;
}

void require_same_signature(const Element& a, const Element& b) {
  if (a.signature() != b.signature() && !(a.sig() == b.sig()))
    throw Error(ErrorCode::SignatureMismatch, "elements belong to different algebras");
}

Element& Element::operator+=(const Element& other) {
  require_same_signature(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_signature(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  out *= Rational(-1);
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.signature() != b.signature() && !(a.sig() == b.sig())) return false;
  return a.terms_ == b.terms_;
}

namespace {

// ∂^λ(x^{β,ĵ}) = Σ_t factor_t · x^{β, ĵ − t}. For p ≤ ℓ₁, ∂_p = β_p + ∂⁻_p
// with commuting parts, so ∂_p^k x^{β,ĵ} = Σ_t C(k,t) β_p^{k−t} (ĵ_p)_t
// x^{β,ĵ−t·1_[p]}; for p > ℓ₁ only the grading part survives.
std::vector<std::pair<MultiIndex, Rational>> dpow_expand(const Signature& sig, const RatVec& beta,
                                                         const MultiIndex& j, const MultiIndex& lambda) {
  const std::size_t n = sig.ell();
  std::vector<std::vector<std::pair<std::int32_t, Rational>>> per_slot(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::int32_t k = lambda[p];
    if (k == 0) {
      per_slot[p].emplace_back(0, Rational(1));
      continue;
    }
    const std::int32_t tmax = p < sig.ell1() ? std::min(k, j[p]) : 0;
    Rational falling = 1;  // (ĵ_p)_t
    for (std::int32_t t = 0; t <= tmax; ++t) {
      if (t > 0) falling *= j[p] - t + 1;
      Rational grading = pow(beta[p], k - t);
      if (grading != 0) per_slot[p].emplace_back(t, Rational(binomial(k, t)) * grading * falling);
    }
    if (per_slot[p].empty()) return {};
  }
  std::vector<std::pair<MultiIndex, Rational>> out;
  MultiIndex choice(n, 0), bound(n);
  for (std::size_t p = 0; p < n; ++p) bound[p] = static_cast<std::int32_t>(per_slot[p].size()) - 1;
  do {
    MultiIndex shifted = j;
    Rational c = 1;
    for (std::size_t p = 0; p < n; ++p) {
      const auto& [t, f] = per_slot[p][static_cast<std::size_t>(choice[p])];
      shifted[p] -= t;
      c *= f;
    }
    out.emplace_back(std::move(shifted), std::move(c));
  } while (next_below(choice, bound));
  return out;
}

void require_in_A(const Element& e, const char* what) {
  if (!e.in_A()) throw Error(ErrorCode::NotInA, std::string(what) + " has terms with nonzero derivation degree");
}

}  // namespace

Element operator*(const Element& a, const Element& b) {
  require_same_signature(a, b);
  const Signature& sig = a.sig();
  const std::size_t n = sig.ell();
  Element out(a.signature());
  if (a.is_zero() || b.is_zero()) return out;

  std::vector<RatVec> beta_cache;
  beta_cache.reserve(b.terms_.size());
  for (const auto& [m2, c2] : b.terms_) beta_cache.push_back(alpha_vector(sig, m2));

  for (const auto& [m1, c1] : a.terms_) {
    MultiIndex lam(n, 0);
    do {
      Integer choose = multi_binomial(m1.mu, lam);
      std::size_t idx = 0;
      for (const auto& [m2, c2] : b.terms_) {
        const RatVec& beta = beta_cache[idx++];
        Rational base = c1 * c2 * Rational(choose);
        for (const auto& [jshift, f] : dpow_expand(sig, beta, m2.i, lam)) {
          Monomial m;
          m.alpha.resize(n);
          m.i.resize(n);
          m.mu.resize(n);
          for (std::size_t p = 0; p < n; ++p) {
            m.alpha[p] = m1.alpha[p] + m2.alpha[p];
            m.i[p] = m1.i[p] + jshift[p];
            m.mu[p] = m1.mu[p] + m2.mu[p] - lam[p];
          }
          out.add_term(m, base * f);
        }
      }
    } while (next_below(lam, m1.mu));
  }
  return out;
}

Element mul(const Element& a, const Element& b) { return a * b; }

Element bracket(const Element& a, const Element& b) { return a * b - b * a; }

Element power(const Element& a, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  Element out = Element::one(a.signature());
  for (std::int64_t s = 0; s < k; ++s) out = out * a;
  return out;
}

Element derivation_apply(const Signature& sig, const MultiIndex& lambda, const Element& target) {
  require_in_A(target, "derivation target");
  if (lambda.size() != sig.ell()) throw Error(ErrorCode::DimensionMismatch, "derivation multi-index length");
  Element out(target.signature());
  for (const auto& [m, c] : target.terms()) {
    RatVec beta = alpha_vector(sig, m);
    for (const auto& [jshift, f] : dpow_expand(sig, beta, m.i, lambda)) {
      Monomial r = m;
      r.i = jshift;
      out.add_term(r, c * f);
    }
  }
  return out;
}

Element act_on_A(const Element& w, const Element& a) {
  require_same_signature(w, a);
  require_in_A(a, "action target");
  const Signature& sig = w.sig();
  Element out(w.signature());
  for (const auto& [m, c] : w.terms()) {
    Element da = derivation_apply(sig, m.mu, a);
    for (const auto& [ma, ca] : da.terms()) {
      Monomial r = ma;
      for (std::size_t p = 0; p < sig.ell(); ++p) {
        r.alpha[p] += m.alpha[p];
        r.i[p] += m.i[p];
      }
      out.add_term(r, c * ca);
    }
  }
  return out;
}

Element change_D_basis(const Matrix& c, const Element& w) {
  const std::size_t n = w.sig().ell();
  if (c.rows() != n || c.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis change matrix size");
  if (c.determinant() == 0) throw Error(ErrorCode::SingularMatrix, "basis change matrix is singular");
  std::vector<detail::IndexPoly> forms;
  forms.reserve(n);
  for (std::size_t p = 0; p < n; ++p) forms.push_back(detail::poly_linear(c.row(p)));
  Element out(w.signature());
  for (const auto& [m, coeff] : w.terms()) {
    detail::IndexPoly dpart = detail::poly_one(n);
    for (std::size_t p = 0; p < n; ++p)
      if (m.mu[p]) dpart = detail::poly_mul(dpart, detail::poly_pow(forms[p], m.mu[p]));
    for (const auto& [mu, f] : dpart) {
      Monomial r = m;
      r.mu = mu;
      out.add_term(r, coeff * f);
    }
  }
  return out;
}

FiltrationData filtration_data(const Element& w) {
  FiltrationData fd;
  for (const auto& [m, c] : w.terms()) {
    if (fd.empty) {
      fd.empty = false;
      fd.max_gamma = fd.min_gamma = m.alpha;
      fd.max_i = m.i;
    } else {
      if (gamma_cmp(m.alpha, fd.max_gamma) > 0) fd.max_gamma = m.alpha;
      if (gamma_cmp(m.alpha, fd.min_gamma) < 0) fd.min_gamma = m.alpha;
      for (std::size_t p = 0; p < m.i.size(); ++p) fd.max_i[p] = std::max(fd.max_i[p], m.i[p]);
    }
    fd.max_i_level = std::max(fd.max_i_level, level(m.i));
    fd.max_level = std::max(fd.max_level, level(m.mu));
  }
  return fd;
}

}  // namespace weyl
