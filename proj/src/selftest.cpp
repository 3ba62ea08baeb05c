#include "weyl/selftest.hpp"

#include <functional>
#include <map>

#include "weyl/classification.hpp"
#include "weyl/error.hpp"
#include "weyl/expr.hpp"
#include "weyl/random.hpp"

namespace weyl {

namespace {

std::string show(const Element& e) { return print_element(e); }

struct Tally {
  SuiteResult r;
  void fail(const std::string& why) {
    if (r.passed) r.failure = why;
    r.passed = false;
  }
};

std::vector<MultiIndex> multi_indices_up_to_level(std::size_t len, int max_level) {
  std::vector<MultiIndex> out;
  MultiIndex mu(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == len) {
      out.push_back(mu);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      mu[k] = v;
      rec(k + 1, left - v);
    }
    mu[k] = 0;
  };
  rec(0, max_level);
  return out;
}

// φ and ψ agree on every generator; reports the first disagreement.
bool agree_on_generators(const SignaturePtr& sig, const std::function<Element(const Element&)>& phi,
                         const std::function<Element(const Element&)>& psi, std::string* why) {
  for (const auto& g : generating_set(sig)) {
    Element a = phi(g), b = psi(g);
    if (!(a == b)) {
      *why = "on " + show(g) + ": " + show(a) + " vs " + show(b);
      return false;
    }
  }
  return true;
}

SuiteResult associativity(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  Tally t{{"associativity", true, "200 triples", ""}};
  for (int k = 0; k < 200; ++k) {
    Element a = s.element(sig), b = s.element(sig), c = s.element(sig);
    if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) t.fail("(ab)c != a(bc) for a = " + show(a) + ", b = " + show(b) + ", c = " + show(c));
  }
  return t.r;
}

SuiteResult lie(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  Tally t{{"lie", true, "200 triples", ""}};
  Element one = Element::one(sig);
  for (int k = 0; k < 200; ++k) {
    Element a = s.element(sig), b = s.element(sig), c = s.element(sig);
    if (!bracket(a, a).is_zero()) t.fail("[a,a] != 0 for a = " + show(a));
    if (!(bracket(a, b) + bracket(b, a)).is_zero()) t.fail("[a,b] != -[b,a] for a = " + show(a) + ", b = " + show(b));
    Element jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    if (!jac.is_zero()) t.fail("Jacobi sum " + show(jac));
    if (!bracket(one, a).is_zero()) t.fail("1 is not central against " + show(a));
  }
  return t.r;
}

SuiteResult reordering(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  const auto mus = multi_indices_up_to_level(sig->ell(), 3);
  Tally t{{"reordering", true, "", ""}};
  int cases = 0;
  for (int k = 0; k < 20; ++k) {
    Monomial m = s.monomial(*sig, ElementParams{});
    m.mu.assign(sig->ell(), 0);
    Element x = Element::monomial(sig, m);
    for (const auto& mu : mus) {
      Element lhs = Element::zero(sig);
      for (const auto& lam : multi_indices_up_to_level(sig->ell(), static_cast<int>(level(mu)))) {
        Integer c = multi_binomial(mu, lam);
        if (c == 0) continue;
        MultiIndex rest(mu.size());
        for (std::size_t p = 0; p < mu.size(); ++p) rest[p] = mu[p] - lam[p];
        Element neg_d = Element::monomial(sig, Monomial{IntVec(sig->ell(), 0), MultiIndex(sig->ell(), 0), rest},
                                          level(rest) % 2 ? Rational(-1) : Rational(1));
        lhs += Rational(c) * mul(neg_d, derivation_apply(*sig, lam, x));
      }
      Element rhs = mul(x, Element::monomial(sig, Monomial{IntVec(sig->ell(), 0), MultiIndex(sig->ell(), 0), mu},
                                             level(mu) % 2 ? Rational(-1) : Rational(1)));
      ++cases;
      if (!(lhs == rhs)) t.fail("mu level " + std::to_string(level(mu)) + " on " + show(x));
    }
  }
  t.r.detail = std::to_string(cases) + " cases";
  return t.r;
}

SuiteResult binomial(std::uint64_t) {
  Tally t{{"binomial", true, "", ""}};
  int pairs = 0;
  for (int m0 = 0; m0 <= 3; ++m0)
    for (int m1 = 0; m1 <= 3; ++m1)
      for (int n0 = 0; n0 <= 3; ++n0)
        for (int n1 = 0; n1 <= 3; ++n1) {
          Integer got = alternating_binomial_sum({m0, m1}, {n0, n1});
          Integer want = (n0 == 0 && n1 == 0) ? 1 : 0;
          ++pairs;
          if (got != want) t.fail("mu = (" + std::to_string(m0) + "," + std::to_string(m1) + "), nu = (" +
                                  std::to_string(n0) + "," + std::to_string(n1) + "): " + got.get_str());
        }
  t.r.detail = std::to_string(pairs) + " pairs";
  return t.r;
}

SuiteResult sigma1(std::uint64_t seed) {
  auto sig = desk_signature();
  Tally t{{"sigma1", true, "100 pairs, 100 involution checks", ""}};
  VerifyReport lie = verify_map(sig, Mode::Lie, apply_sigma1, 100, seed);
  if (!lie.passed) t.fail("Lie-mode counterexample on " + show(lie.counterexample->a) + ", " + show(lie.counterexample->b));
  Sampler s(seed);
  for (int k = 0; k < 100; ++k) {
    Element w = s.element(sig);
    if (!(apply_sigma1(apply_sigma1(w)) == w)) t.fail("sigma1^2 moves " + show(w));
  }
  VerifyReport assoc = verify_map(sig, Mode::Assoc, apply_sigma1, 100, seed);
  if (assoc.passed) {
    t.fail("associative check unexpectedly passed");
  } else {
    const Counterexample& c = *assoc.counterexample;
    bool is_d = c.a.size() == 1 && c.a.in_FD() && c.a.max_level() == 1;
    if (!(c.a == c.b) || !is_d || c.lhs == c.rhs)
      t.fail("counterexample is not of the form sigma1(d^2) != sigma1(d)sigma1(d): " + show(c.a) + ", " + show(c.b));
    else
      t.r.detail += ", assoc counterexample " + show(c.lhs) + " != " + show(c.rhs);
  }
  return t.r;
}

SuiteResult exp_ad(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  Tally t{{"exp-ad", true, "100 nilpotency pairs, 10 automorphisms in both modes", ""}};
  for (int k = 0; k < 100; ++k) {
    Element u = s.a_element(sig), m = s.monomial_element(sig);
    Element cur = m;
    for (std::int64_t step = 0; step <= m.max_level(); ++step) cur = bracket(u, cur);
    if (!cur.is_zero()) t.fail("(ad u)^(level+1) m != 0 for u = " + show(u) + ", m = " + show(m));
  }
  for (int k = 0; k < 10; ++k) {
    InnerExp e = InnerExp::from(s.a_element(sig));
    for (Mode mode : {Mode::Lie, Mode::Assoc}) {
      VerifyReport r = verify_map(
          sig, mode, [&](const Element& w) { return apply_exp_ad(e, w); }, 20, seed + static_cast<std::uint64_t>(k));
      if (!r.passed) t.fail("exp(ad u) fails " + std::string(mode_name(mode)) + " verification, u = " + show(e.u));
    }
  }
  return t.r;
}

SuiteResult group_laws(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  Tally t{{"group-laws", true, "50 conjugations, 50 compositions", ""}};
  std::string why;
  for (int k = 0; k < 50; ++k) {
    NormalFormAut r = random_normal_form(s, sig, false);
    TauAut tinv = tau_inverse(*sig, r.tau);
    auto lhs = [&](const Element& w) {
      return apply_tau(sig, tinv, apply_shift(sig, r.v, apply_tau(sig, r.tau, w)));
    };
    auto rhs = [&](const Element& w) {
      return apply_exp_ad(InnerExp::from(tau_bracket(sig, r.tau, r.v.v)),
                          apply_shift(sig, ShiftV{tau_of_v(*sig, r.tau, r.v.v)}, w));
    };
    if (!agree_on_generators(sig, lhs, rhs, &why)) t.fail("conjugation " + why);
  }
  for (int k = 0; k < 50; ++k) {
    NormalFormAut a = random_normal_form(s, sig, false), b = random_normal_form(s, sig, false);
    NormalFormAut ab = compose_normal_forms(a, b);
    if (!agree_on_generators(
            sig, [&](const Element& w) { return apply_normal_form(ab, w); },
            [&](const Element& w) { return apply_normal_form(a, apply_normal_form(b, w)); }, &why))
      t.fail("composition " + why);
  }
  return t.r;
}

SuiteResult decomposition(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  Tally t{{"decomposition", true, "", ""}};
  int twisted = 0;
  for (int k = 0; k < 50; ++k) {
    NormalFormAut a = random_normal_form(s, sig, true);
    if (k % 5 == 0) a.eps = 1;
    twisted += a.eps;
    try {
      NormalFormAut back = decompose_automorphism(to_functional(a, Mode::Lie));
      if (!(back == a)) t.fail("round trip differs for instance " + std::to_string(k));
    } catch (const Error& e) {
      t.fail("instance " + std::to_string(k) + ": " + e.what());
    }
  }
  t.r.detail = "50 automorphisms, " + std::to_string(twisted) + " with sigma1";
  return t.r;
}

SuiteResult iso(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  Tally t{{"iso", true, "20 maps x 100 products", ""}};
  for (int k = 0; k < 20; ++k) {
    IsoCandidate c{random_aut2(s, *sig), random_character(s, sig->ell())};
    try {
      IsoVerified v = iso_verify(sig, sig, c, 100, seed + static_cast<std::uint64_t>(k));
      if (!v.report.passed) t.fail("candidate " + std::to_string(k) + " rejected");
    } catch (const Error& e) {
      t.fail("candidate " + std::to_string(k) + ": " + e.what());
    }
  }
  auto a = make_signature(1, 1, {{1, 0}, {0, 1}});
  auto b = make_signature(2, 0, {{1, 0}, {0, 1}});
  IsoSearchResult r = iso_search_bounded(a, b, 3);
  if (r.kind != IsoSearchResult::Kind::Impossible || r.examined != 0)
    t.fail("(1,1) vs (2,0) not rejected by invariants");
  t.r.detail += ", (1,1) vs (2,0) Impossible with 0 candidates";
  return t.r;
}

SuiteResult faithfulness(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  Tally t{{"faithfulness", true, "100 operators", ""}};
  for (int k = 0; k < 100; ++k) {
    Element u = s.fd_element(sig, 4, 5);
    auto w = faithfulness_witness(u);
    if (!w) {
      t.fail("no witness for " + show(u));
      continue;
    }
    for (auto n : w->n)
      if (n > 4) t.fail("witness outside the box for " + show(u));
    if (w->value.is_zero() || !(act_on_A(u, Element::x(sig, w->n)) == w->value))
      t.fail("witness value wrong for " + show(u));
  }
  return t.r;
}

std::vector<Element> wild_shapes(const SignaturePtr& sig) {
  auto mono = [&](IntVec a, MultiIndex i, MultiIndex mu, Rational c = 1) {
    return Element::monomial(sig, Monomial{std::move(a), std::move(i), std::move(mu)}, c);
  };
  return {
      // top Γ-degree zero
      Element::d(sig, 0, 2),
      Element::d(sig, 1, 2) + Element::d(sig, 0),
      mono({0, 0}, {1, 0}, {1, 0}),
      mono({0, 0}, {2, 0}, {0, 1}) + Element::d(sig, 1),
      mono({0, 0}, {0, 0}, {1, 1}, 3) + mono({1, 0}, {0, 0}, {0, 0}),
      // nonzero top Γ-degree
      mono({1, 0}, {0, 0}, {2, 0}),
      mono({1, 0}, {0, 0}, {1, 0}),
      mono({-1, 1}, {0, 0}, {0, 2}),
      mono({0, -1}, {1, 0}, {1, 1}) + mono({0, 0}, {0, 0}, {2, 0}),
      mono({2, -1}, {0, 0}, {0, 1}) + Element::d(sig, 0),
  };
}

SuiteResult lemma12(std::uint64_t seed) {
  auto sig = desk_signature();
  Sampler s(seed);
  Tally t{{"lemma12", true, "", ""}};
  for (int k = 0; k < 50; ++k) {
    Element u = s.a_element(sig), probe = s.monomial_element(sig);
    auto rows = growth_probe(u, probe, static_cast<int>(probe.max_level()) + 1);
    if (!rows.back().data.empty) t.fail("A-element " + show(u) + " does not annihilate " + show(probe));
  }
  std::vector<Element> wild = wild_shapes(sig);
  const std::size_t shaped = wild.size();
  while (wild.size() < shaped + 20) {
    Element w = s.element(sig);
    if (classify_ad_behavior(w, 1).tag == AdTag::Wild) wild.push_back(w);
  }
  for (const auto& w : wild) {
    AdBehavior b = classify_ad_behavior(w, 5);
    if (b.tag != AdTag::Wild || !b.growth) t.fail("no monotone growth for " + show(w));
  }
  for (int k = 0; k < 100; ++k) {
    Element a = s.element(sig), b = s.element(sig);
    FiltrationCheck f = filtration_laws(a, b);
    if (!(f.gamma_ok && f.level_ok && f.i_ok)) t.fail("filtration laws fail on " + show(a) + ", " + show(b));
  }
  t.r.detail = "50 annihilations, " + std::to_string(wild.size()) + " wild elements over 5 steps, 100 filtration pairs";
  return t.r;
}

std::string printed_batch(const SignaturePtr& sig, std::uint64_t seed) {
  Sampler s(seed);
  std::string out;
  for (int k = 0; k < 200; ++k) out += print_element(s.element(sig)) + "\n";
  return out;
}

SuiteResult parser(std::uint64_t seed) {
  auto sig = desk_signature();
  SessionConfig cfg;
  cfg.signature = sig;
  Sampler s(seed);
  Tally t{{"parser", true, "200 elements, rerun identical", ""}};
  for (int k = 0; k < 200; ++k) {
    Element e = s.element(sig);
    std::string text = print_element(e);
    try {
      Element back = parse_and_eval(text, cfg);
      if (!(back == e) || print_element(back) != text) t.fail("round trip changes " + text);
    } catch (const Error& err) {
      t.fail(text + ": " + err.what());
    }
  }
  if (printed_batch(sig, seed) != printed_batch(sig, seed)) t.fail("rerun with the same seed differs");
  return t.r;
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"associativity", associativity}, {"lie", lie},
      {"reordering", reordering},       {"binomial", binomial},
      {"sigma1", sigma1},               {"exp-ad", exp_ad},
      {"group-laws", group_laws},       {"decomposition", decomposition},
      {"iso", iso},                     {"faithfulness", faithfulness},
      {"lemma12", lemma12},             {"parser", parser},
  };
  return suites;
}

}  // namespace

SignaturePtr desk_signature() {
  static const SignaturePtr sig = [] {
    Rational half(1, 2);
    return make_signature(1, 1, {{1, 0}, {0, 1}, {half, half}});
  }();
  return sig;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(seed);
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::string format_suite(const SuiteResult& r) {
  std::string out = (r.passed ? "PASS " : "FAIL ") + r.name + " (" + r.detail + ")";
  if (!r.passed) out += ": " + r.failure;
  return out;
}

}  // namespace weyl
