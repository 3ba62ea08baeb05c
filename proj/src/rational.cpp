#include "weyl/rational.hpp"

#include <cctype>

#include "weyl/error.hpp"

namespace weyl {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NondegenerateViolation: return "NondegenerateViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotInA: return "NotInA";
    case ErrorCode::NotInFD: return "NotInFD";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::BlockShapeViolation: return "BlockShapeViolation";
    case ErrorCode::LatticeNotMapped: return "LatticeNotMapped";
    case ErrorCode::HomomorphismCounterexample: return "HomomorphismCounterexample";
    case ErrorCode::Sigma1NotSupported: return "Sigma1NotSupported";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational pow(const Rational& r, std::int64_t k) {
  if (k < 0) {
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "negative power of zero");
    return pow(Rational(1 / r), -k);
  }
  Rational result = 1;
  Rational base = r;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot of vectors with different lengths");
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += to_string(v[k]);
  }
  return out + ")";
}

}  // namespace weyl
