#include <gtest/gtest.h>

#include "weyl/io.hpp"
#include "weyl/random.hpp"

using namespace weyl;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

SessionConfig cfg_for(SignaturePtr sig) {
  SessionConfig c;
  c.signature = std::move(sig);
  return c;
}

SessionConfig desk() { return cfg_for(make_signature(1, 1, {{1, 0}, {0, 1}, {q(1, 2), q(1, 2)}})); }
SessionConfig integral(std::size_t ell1, std::size_t ell2) {
  std::vector<RatVec> gens;
  for (std::size_t k = 0; k < ell1 + ell2; ++k) {
    gens.emplace_back(ell1 + ell2, Rational(0));
    gens.back()[k] = 1;
  }
  return cfg_for(make_signature(ell1, ell2, gens));
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

}  // namespace

TEST(Parse, Shapes) {
  SessionConfig c = cfg_for(make_signature(1, 1, {{1, 0}, {0, 1}}));
  EXPECT_EQ(parse_element("x[(1,0)] * d1^2", c).describe(), "Product(GenX((1,0)), GenD(1,2))");
  EXPECT_EQ(parse_element("3/2 * x[(0,1);(2,0)] + [d1, x[(1,0)]]", c).describe(),
            "Sum(Product(Scalar(3/2), GenX((0,1);(2,0))), Bracket(GenD(1,1), GenX((1,0))))");
  EXPECT_EQ(parse_element("-(d2)", c).describe(), "Sum(Neg(Paren(GenD(2,1))))");
  EXPECT_EQ(parse_element("7", c).describe(), "Scalar(7)");
  EXPECT_EQ(parse_element("x[();(3)]", c).describe(), "GenX((0,0);(3,0))");
}

TEST(Parse, DimensionErrors) {
  SessionConfig c = desk();
  EXPECT_EQ(code_of([&] { parse_element("x[(1)]", c); }), ErrorCode::DimensionError);
  EXPECT_EQ(code_of([&] { parse_element("d3", c); }), ErrorCode::DimensionError);
  EXPECT_EQ(code_of([&] { parse_element("d0", c); }), ErrorCode::DimensionError);
  EXPECT_EQ(code_of([&] { parse_element("x[(0,0);(0,1)]", c); }), ErrorCode::DimensionError);
  EXPECT_EQ(code_of([&] { parse_element("x[(0,0);(1,0,0)]", c); }), ErrorCode::DimensionError);
}

TEST(Parse, SyntaxErrorsCarryPositionAndExpectations) {
  SessionConfig c = desk();
  try {
    parse_element("d1 +\n  * d2", c);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position().line, 2U);
    EXPECT_EQ(e.position().column, 3U);
    EXPECT_EQ(e.expected(), (std::set<std::string>{"'x['", "'d'", "'['", "'('"}));
    EXPECT_EQ(e.found(), "'*'");
  }
  try {
    parse_element("[d1, d2", c);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position().column, 8U);
    EXPECT_EQ(e.expected(), (std::set<std::string>{"']'"}));
    EXPECT_EQ(e.found(), "end of input");
  }
  for (const char* bad : {"", "x(1,0)", "d", "d1 d2", "1/0 * d1", "x[(1,,0)]", "d1^", "2 * 3", "x[(a,0)]"})
    EXPECT_EQ(code_of([&] { parse_element(bad, c); }), ErrorCode::SyntaxError) << bad;
}

TEST(Eval, Examples) {
  SessionConfig w10 = integral(1, 0);
  Element e = parse_and_eval("d1 * x[();(1)]", w10);
  EXPECT_EQ(e, Element::x(w10.signature, {0}, {1}) * Element::d(w10.signature, 0) + Element::one(w10.signature));
  EXPECT_EQ(print_element(e), "1 + x[(0);(1)] * d1");

  SessionConfig w01 = integral(0, 1);
  EXPECT_EQ(parse_and_eval("[d1, x[(1)]]", w01), Element::x(w01.signature, {1}));
  EXPECT_TRUE(parse_and_eval("0 * d1", w01).is_zero());
  EXPECT_EQ(print_element(parse_and_eval("0 * d1", w01)), "0");
  EXPECT_EQ(print_element(parse_and_eval("d1", w01)), "d1");

  SessionConfig c = desk();
  EXPECT_EQ(code_of([&] { parse_and_eval("x[(1/3,0)]", c); }), ErrorCode::NotMember);
  EXPECT_EQ(print_element(parse_and_eval("x[(1/2,1/2)] - 2*d2^3*d1 - x[(1/2,1/2)]", c)), "-2 * d1 * d2^3");
}

TEST(Print, Format) {
  SessionConfig c = desk();
  Element e = parse_and_eval("-3/2 * x[(1/2,-1/2);(2)] * d1^2 * d2 + d2 - 1", c);
  EXPECT_EQ(print_element(e), "-1 + d2 - 3/2 * x[(1/2,-1/2);(2,0)] * d1^2 * d2");
}

TEST(Print, RoundTripOnRandomElements) {
  std::vector<SessionConfig> cfgs = {desk(), integral(0, 1), integral(2, 0),
                                     cfg_for(make_signature(1, 2, {{1, 0, 0}, {0, q(1, 3), 0}, {0, 0, 2}}))};
  Sampler s(11);
  for (const auto& c : cfgs) {
    for (int t = 0; t < 200; ++t) {
      Element e = s.element(c.signature);
      const std::string text = print_element(e);
      Element back = parse_and_eval(text, c);
      ASSERT_EQ(back, e) << text;
      EXPECT_EQ(print_element(back), text);
    }
  }
}

TEST(Json, ElementRoundTrip) {
  SessionConfig c = desk();
  Sampler s(12);
  for (int t = 0; t < 100; ++t) {
    Element e = s.element(c.signature);
    Json j = element_json(e);
    Element back = element_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, e);
    EXPECT_EQ(element_json(back).dump(), j.dump());
  }
  Element e = parse_and_eval("1/2 * x[(1/2,1/2);(1,0)] * d2", c);
  EXPECT_EQ(element_json(e).dump(),
            R"({"signature":{"ell1":1,"ell2":1,"gamma_generators":[["1","0"],["0","1"],["1/2","1/2"]]},)"
            R"("terms":[{"alpha":["1/2","1/2"],"i":[1,0],"mu":[0,1],"coeff":"1/2"}]})");
}

TEST(Json, RejectsMalformedElements) {
  SessionConfig c = desk();
  Json good = element_json(parse_and_eval("d1", c));
  Json j = good;
  j["terms"][0]["alpha"] = {"1/3", "0"};
  EXPECT_EQ(code_of([&] { element_from_json(j); }), ErrorCode::NotMember);
  j = good;
  j["terms"][0]["i"] = {0, 1};
  EXPECT_EQ(code_of([&] { element_from_json(j); }), ErrorCode::DimensionError);
  j = good;
  j["terms"][0]["coeff"] = "x";
  EXPECT_EQ(code_of([&] { element_from_json(j); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { element_from_json(good, integral(2, 0).signature); }), ErrorCode::SignatureMismatch);
}

TEST(Json, LatticeAndSignature) {
  Lattice l = Lattice::from_generators(2, {{2, 0}, {1, q(1, 2)}});
  EXPECT_EQ(lattice_from_json(lattice_json(l)), l);
  EXPECT_EQ(lattice_json(l).dump(), R"({"ambient_dim":2,"generators":[["2","0"],["1","1/2"]]})");
  auto sig = desk().signature;
  EXPECT_TRUE(*signature_from_json(signature_json(*sig)) == *sig);
  Json ints = Json::parse(R"({"ell1":1,"ell2":0,"gamma_generators":[[3]]})");
  EXPECT_EQ(signature_from_json(ints)->lattice().basis(), Matrix::from_rows({{3}}));
}

TEST(Json, AutomorphismRoundTrip) {
  SessionConfig c = desk();
  Sampler s(13);
  for (int t = 0; t < 20; ++t) {
    NormalFormAut a = random_normal_form(s, c.signature, t % 2 == 1);
    Mode mode = t % 3 == 0 ? Mode::Assoc : Mode::Lie;
    LoadedNormalForm back = normal_form_from_json(Json::parse(normal_form_json(a, mode).dump()));
    EXPECT_TRUE(back.aut == a);
    EXPECT_EQ(back.mode, mode);

    FunctionalAut phi = to_functional(a, Mode::Lie);
    FunctionalAut phi_back = functional_from_json(Json::parse(functional_json(phi).dump()));
    EXPECT_TRUE(phi_back == phi);
  }
}

TEST(Json, ConfigFile) {
  Json j = Json::parse(R"({"ell1":1,"ell2":1,"gamma_generators":[["1","0"],["0","1"],["1/2","1/2"]],
                           "mode":"assoc","seed":9,"trials":12})");
  SessionConfig c = config_from_json(j);
  EXPECT_TRUE(*c.signature == *desk().signature);
  EXPECT_EQ(c.mode, Mode::Assoc);
  EXPECT_EQ(c.seed, 9U);
  EXPECT_EQ(c.bounds.trials, 12);
  EXPECT_EQ(code_of([] { config_from_json(Json::parse(R"({"ell1":1})")); }), ErrorCode::InvalidArgument);
}
