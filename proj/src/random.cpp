#include "weyl/random.hpp"

namespace weyl {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational Sampler::nonzero_rational(std::int64_t num_bound, std::int64_t den_bound) {
  std::int64_t num = 0;
  while (num == 0) num = uniform(-num_bound, num_bound);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(uniform(1, den_bound)));
  r.canonicalize();
  return r;
}

Rational Sampler::coefficient() { return nonzero_rational(5, 3); }

MultiIndex Sampler::multi_index(std::size_t length, std::size_t active, int max_total) {
  MultiIndex out(length, 0);
  if (active == 0) return out;
  auto total = uniform(0, max_total);
  for (std::int64_t k = 0; k < total; ++k) ++out[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(active) - 1))];
  return out;
}

Monomial Sampler::monomial(const Signature& sig, const ElementParams& p) {
  Monomial m;
  m.alpha.resize(sig.ell());
  for (auto& a : m.alpha) a = uniform(-p.coord_bound, p.coord_bound);
  m.i = multi_index(sig.ell(), sig.ell1(), p.max_i_level);
  m.mu = multi_index(sig.ell(), sig.ell(), p.max_level);
  return m;
}

Element Sampler::element(const SignaturePtr& sig, const ElementParams& p) {
  Element e(sig);
  auto n = uniform(1, p.max_terms);
  for (std::int64_t k = 0; k < n; ++k) e.add_term(monomial(*sig, p), coefficient());
  return e;
}

Element Sampler::a_element(const SignaturePtr& sig, const ElementParams& p) {
  ElementParams q = p;
  q.max_level = 0;
  Element e(sig);
  while (e.is_zero()) e = element(sig, q);
  return e;
}

Element Sampler::monomial_element(const SignaturePtr& sig, const ElementParams& p) {
  return Element::monomial(sig, monomial(*sig, p));
}

Element Sampler::fd_element(const SignaturePtr& sig, int max_degree, int max_terms) {
  Element e(sig);
  while (e.is_zero()) {
    auto n = uniform(1, max_terms);
    for (std::int64_t k = 0; k < n; ++k) {
      Monomial m = unit_monomial(*sig);
      m.mu = multi_index(sig->ell(), sig->ell(), max_degree);
      e.add_term(m, coefficient());
    }
  }
  return e;
}

}  // namespace weyl
