#include "weyl/classification.hpp"

#include <algorithm>
#include <functional>

#include "weyl/error.hpp"

namespace weyl {

SignatureInvariants signature_invariants(const Signature& sig) {
  return {sig.ell1(), sig.ell2(), sig.lattice().basis()};
}

std::optional<std::string> invariant_obstruction(const Signature& src, const Signature& dst) {
  if (src.ell1() == dst.ell1() && src.ell2() == dst.ell2()) return std::nullopt;
  return "(ell1, ell2) = (" + std::to_string(src.ell1()) + ", " + std::to_string(src.ell2()) + ") vs (" +
         std::to_string(dst.ell1()) + ", " + std::to_string(dst.ell2()) + ")";
}

std::string_view kind_name(IsoSearchResult::Kind k) {
  switch (k) {
    case IsoSearchResult::Kind::Found: return "Found";
    case IsoSearchResult::Kind::Impossible: return "Impossible";
    case IsoSearchResult::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

IsoVerified iso_verify(const SignaturePtr& src, const SignaturePtr& dst, const IsoCandidate& cand, int trials,
                       std::uint64_t seed) {
  if (auto why = invariant_obstruction(*src, *dst)) throw Error(ErrorCode::SignatureMismatch, *why);
  if (cand.G.ell1() != src->ell1() || cand.G.ell2() != src->ell2())
    throw Error(ErrorCode::BlockShapeViolation, "candidate blocks do not match (ell1, ell2)");

  const Matrix ginv = cand.G.inverse().entries();
  std::vector<RatVec> image_rows;
  for (const auto& row : src->lattice().basis().row_list()) image_rows.push_back(row * ginv);
  if (!(Lattice::from_generators(src->ell(), image_rows) == dst->lattice()))
    throw Error(ErrorCode::LatticeNotMapped, "Γ·G⁻¹ differs from the target lattice");

  GeneratorImages images = tau_images(src, dst, cand.G, cand.f);
  VerifyReport rep = verify_map(
      src, Mode::Assoc, [&](const Element& w) { return extend_homomorphically(images, w); }, trials, seed);
  if (!rep.passed) throw Error(ErrorCode::HomomorphismCounterexample, "generator map does not preserve a product");
  return {std::move(images), rep};
}

namespace {

// Integer matrices (flattened) with entries in [−bound, bound] at distance
// exactly r from the identity, lexicographically. The callback returns true to stop.
bool walk_radius(std::size_t ell, int bound, int r, std::vector<std::int64_t>& cur, std::size_t pos,
                 const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  const std::size_t n = ell * ell;
  if (pos == n) return r == 0 && visit(cur);
  const std::int64_t id = pos / ell == pos % ell ? 1 : 0;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    const auto cost = static_cast<int>(x > id ? x - id : id - x);
    if (cost > r) continue;
    cur[pos] = x;
    if (walk_radius(ell, bound, r - cost, cur, pos + 1, visit)) return true;
  }
  return false;
}

}  // namespace

IsoSearchResult iso_search_bounded(const SignaturePtr& src, const SignaturePtr& dst, int bound, std::uint64_t cap,
                                   int trials, std::uint64_t seed) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be at least 1");
  IsoSearchResult res{IsoSearchResult::Kind::Unknown, std::nullopt, "", 0};
  if (auto why = invariant_obstruction(*src, *dst)) {
    res.kind = IsoSearchResult::Kind::Impossible;
    res.reason = *why;
    return res;
  }
  const std::size_t ell = src->ell();
  const Matrix& b = src->lattice().basis();
  const Matrix bpinv = dst->lattice().basis().inverse();

  bool capped = false;
  auto visit = [&](const std::vector<std::int64_t>& flat) {
    if (res.examined >= cap) {
      capped = true;
      return true;
    }
    ++res.examined;
    Matrix u(ell, ell);
    for (std::size_t k = 0; k < flat.size(); ++k) u(k / ell, k % ell) = Rational(static_cast<long>(flat[k]));
    const Rational det = u.determinant();
    if (det != 1 && det != -1) return false;
    Matrix g = bpinv * u.inverse() * b;
    if (!BlockMatrix::has_block_shape(g, src->ell1())) return false;
    IsoCandidate cand{BlockMatrix(g, src->ell1(), src->ell2()), Character::trivial(ell)};
    try {
      iso_verify(src, dst, cand, trials, seed);
    } catch (const Error&) {
      return false;
    }
    res.kind = IsoSearchResult::Kind::Found;
    res.candidate = std::move(cand);
    return true;
  };
  std::vector<std::int64_t> cur(ell * ell, 0);
  const int max_r = static_cast<int>(ell * ell) * (bound + 1);
  for (int r = 0; r <= max_r; ++r)
    if (walk_radius(ell, bound, r, cur, 0, visit)) break;

  if (res.kind == IsoSearchResult::Kind::Found) return res;
  res.reason = capped ? "search budget exhausted" : "no block-form candidate within the entry bound";
  return res;
}

std::optional<FaithfulnessWitness> faithfulness_witness(const Element& u) {
  if (u.is_zero()) throw Error(ErrorCode::ZeroElement, "faithfulness needs a nonzero element");
  if (!u.in_FD()) throw Error(ErrorCode::NotInFD, "faithfulness witness needs an element of F[D]");
  const SignaturePtr& sig = u.signature();
  const std::size_t ell = sig->ell();
  const auto deg = static_cast<std::int64_t>(u.max_level());

  IntVec n(ell, 0);
  std::optional<FaithfulnessWitness> found;
  // Fill positions pos.. with total `left`, each entry in [0, deg], lexicographically.
  std::function<bool(std::size_t, std::int64_t)> fill = [&](std::size_t pos, std::int64_t left) {
    if (pos + 1 == ell) {
      if (left > deg) return false;
      n[pos] = left;
      Element value = act_on_A(u, Element::x(sig, n));
      if (value.is_zero()) return false;
      found = FaithfulnessWitness{n, sig->lattice().point(n), std::move(value)};
      return true;
    }
    for (std::int64_t x = 0; x <= std::min(deg, left); ++x) {
      n[pos] = x;
      if (fill(pos + 1, left - x)) return true;
    }
    return false;
  };
  for (std::int64_t t = 0; t <= deg * static_cast<std::int64_t>(ell); ++t)
    if (fill(0, t)) break;
  return found;
}

std::vector<GrowthRow> growth_probe(const Element& w, const Element& probe, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be at least 1");
  require_same_signature(w, probe);
  std::vector<GrowthRow> rows;
  Element cur = probe;
  for (int s = 0; s <= steps; ++s) {
    rows.push_back({s, filtration_data(cur)});
    if (s < steps) cur = bracket(w, cur);
  }
  return rows;
}

std::optional<std::string> strict_growth(const std::vector<GrowthRow>& rows) {
  if (rows.size() < 2) return std::nullopt;
  for (const auto& r : rows)
    if (r.data.empty) return std::nullopt;
  auto all_steps = [&](auto&& grows) {
    for (std::size_t k = 1; k < rows.size(); ++k)
      if (!grows(rows[k - 1].data, rows[k].data)) return false;
    return true;
  };
  if (all_steps([](const auto& a, const auto& b) { return gamma_cmp(b.max_gamma, a.max_gamma) > 0; }))
    return "max_gamma";
  if (all_steps([](const auto& a, const auto& b) { return gamma_cmp(b.min_gamma, a.min_gamma) < 0; }))
    return "min_gamma";
  if (all_steps([](const auto& a, const auto& b) { return b.max_level > a.max_level; })) return "level";
  if (all_steps([](const auto& a, const auto& b) { return b.max_i_level > a.max_i_level; })) return "i_level";
  return std::nullopt;
}

std::string_view tag_name(AdTag t) {
  switch (t) {
    case AdTag::InA: return "in_A";
    case AdTag::InDPlusA: return "in_D_plus_A";
    case AdTag::Wild: return "wild";
  }
  return "wild";
}

namespace {

bool is_zero_vec(const auto& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

AdTag syntactic_tag(const Element& w) {
  if (w.in_A()) return AdTag::InA;
  for (const auto& [m, c] : w.terms()) {
    const auto lv = level(m.mu);
    if (lv > 1) return AdTag::Wild;
    if (lv == 1 && (!is_zero_vec(m.alpha) || !is_zero_vec(m.i))) return AdTag::Wild;
  }
  return AdTag::InDPlusA;
}

}  // namespace

std::vector<Element> wild_probes(const Element& w) {
  const SignaturePtr& sig = w.signature();
  const std::size_t ell = sig->ell();
  const std::int64_t top = w.max_level();
  std::vector<IntVec> gammas;
  for (const auto& [m, c] : w.terms())
    if (level(m.mu) == top) gammas.push_back(m.alpha);
  std::vector<Element> out;
  if (gammas.empty()) return out;
  auto lex_less = [](const IntVec& a, const IntVec& b) { return gamma_cmp(a, b) < 0; };
  IntVec beta = *std::max_element(gammas.begin(), gammas.end(), lex_less);
  if (is_zero_vec(beta)) beta = *std::min_element(gammas.begin(), gammas.end(), lex_less);

  if (!is_zero_vec(beta)) {
    IntVec twice = beta;
    for (auto& x : twice) x *= 2;
    out.push_back(Element::x(sig, twice));
  }

  // The lattice generator picked by the top ∂-monomial at degree β, read in
  // the basis dual to the lattice basis.
  std::size_t first_k = ell - 1;
  {
    MultiIndex j;
    for (const auto& [m, c] : w.terms())
      if (level(m.mu) == top && m.alpha == beta && (j.empty() || total_order_cmp(m.i, j) > 0)) j = m.i;
    Element part(sig);
    for (const auto& [m, c] : w.terms())
      if (level(m.mu) == top && m.alpha == beta && m.i == j) {
        Monomial dm = unit_monomial(*sig);
        dm.mu = m.mu;
        part.add_term(dm, c);
      }
    Element in_dual = change_D_basis(sig->lattice().basis().transpose(), part);
    std::optional<MultiIndex> lambda;
    for (const auto& [m, c] : in_dual.terms())
      if (level(m.mu) == top && (!lambda || total_order_cmp(m.mu, *lambda) > 0)) lambda = m.mu;
    if (lambda)
      for (std::size_t k = 0; k < ell; ++k)
        if ((*lambda)[k] != 0) first_k = k;
  }
  auto unit = [&](std::size_t k, std::int64_t sgn) {
    IntVec n(ell, 0);
    n[k] = sgn;
    return Element::x(sig, n);
  };
  out.push_back(unit(first_k, 1));
  for (std::size_t k = 0; k < ell; ++k)
    if (k != first_k) out.push_back(unit(k, 1));
  for (std::size_t k = 0; k < ell; ++k) out.push_back(unit(k, -1));
  return out;
}

AdBehavior classify_ad_behavior(const Element& w, int steps) {
  AdBehavior out{syntactic_tag(w), std::nullopt, {}, std::nullopt};
  if (out.tag != AdTag::Wild) return out;
  for (const auto& probe : wild_probes(w)) {
    auto rows = growth_probe(w, probe, steps);
    auto g = strict_growth(rows);
    if (!out.probe || g) {
      out.probe = probe;
      out.rows = std::move(rows);
      out.growth = g;
    }
    if (g) break;
  }
  return out;
}

FiltrationCheck filtration_laws(const Element& a, const Element& b) {
  FiltrationCheck out;
  const Element c = bracket(a, b);
  const FiltrationData fa = filtration_data(a), fb = filtration_data(b), fc = filtration_data(c);
  if (!fc.empty) {
    IntVec hi = fa.max_gamma, lo = fa.min_gamma;
    for (std::size_t k = 0; k < hi.size(); ++k) {
      hi[k] += fb.max_gamma[k];
      lo[k] += fb.min_gamma[k];
    }
    out.gamma_ok = gamma_cmp(fc.max_gamma, hi) <= 0 && gamma_cmp(fc.min_gamma, lo) >= 0;
    if (fa.max_level >= 1 && fb.max_level >= 1) out.level_ok = fc.max_level <= fa.max_level + fb.max_level - 1;
  }
  if (!a.is_zero() && !b.is_zero()) {
    const SignaturePtr& sig = a.signature();
    Monomial dm = unit_monomial(*sig), xm = unit_monomial(*sig);
    dm.mu = a.terms().rbegin()->first.mu;
    xm.i = b.terms().rbegin()->first.i;
    const Element e = bracket(Element::monomial(sig, dm), Element::monomial(sig, xm));
    for (const auto& [m, coeff] : e.terms()) {
      bool below = total_order_cmp(m.i, xm.i) < 0;
      for (std::size_t p = 0; p < m.i.size(); ++p) below = below && m.i[p] <= xm.i[p];
      out.i_ok = out.i_ok && below;
    }
  }
  return out;
}

}  // namespace weyl
