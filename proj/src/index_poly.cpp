#include "weyl/index_poly.hpp"

namespace weyl::detail {

IndexPoly poly_one(std::size_t nvars) { return {{MultiIndex(nvars, 0), Rational(1)}}; }

IndexPoly poly_linear(const RatVec& coeffs, const Rational& constant) {
  IndexPoly p;
  MultiIndex e(coeffs.size(), 0);
  if (constant != 0) p[e] = constant;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    e[k] = 1;
    p[e] = coeffs[k];
    e[k] = 0;
  }
  return p;
}

IndexPoly poly_mul(const IndexPoly& a, const IndexPoly& b) {
  IndexPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      MultiIndex e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IndexPoly poly_pow(const IndexPoly& a, std::int64_t k) {
  std::size_t nvars = a.empty() ? 0 : a.begin()->first.size();
  IndexPoly result = poly_one(nvars);
  for (std::int64_t s = 0; s < k; ++s) result = poly_mul(result, a);
  return result;
}

}  // namespace weyl::detail
