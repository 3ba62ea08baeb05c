#include "weyl/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace weyl {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

MultiIndex index_from_json(const Json& j, std::size_t len, const char* what) {
  if (!j.is_array() || j.size() != len)
    bad(std::string(what) + " must be an array of " + std::to_string(len) + " integers");
  MultiIndex out;
  for (const auto& v : j) {
    std::int64_t k = as_int(v, what);
    if (k < 0 || k > std::numeric_limits<std::int32_t>::max()) bad(std::string(what) + " entries must be natural");
    out.push_back(static_cast<std::int32_t>(k));
  }
  return out;
}

Json elements_json(const std::vector<Element>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(terms_json(e));
  return out;
}

std::vector<Element> elements_from_json(const SignaturePtr& sig, const Json& j, std::size_t count, const char* what) {
  if (!j.is_array() || j.size() != count)
    bad(std::string("images.") + what + " must list " + std::to_string(count) + " elements");
  std::vector<Element> out;
  for (const auto& t : j) out.push_back(terms_from_json(sig, t));
  return out;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  bad("rational must be a \"p/q\" string or an integer");
}

Json vector_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_json(r));
  return out;
}

RatVec vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  RatVec out;
  for (const auto& r : j) out.push_back(rational_from_json(r));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m.row_list()) out.push_back(vector_json(row));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a nonempty array of rows");
  std::vector<RatVec> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) bad("matrix rows differ in length");
  return Matrix::from_rows(rows);
}

Json lattice_json(const Lattice& l) {
  Json out;
  out["ambient_dim"] = l.ambient_dim();
  Json gens = Json::array();
  for (const auto& g : l.generators()) gens.push_back(vector_json(g));
  out["generators"] = gens;
  return out;
}

Lattice lattice_from_json(const Json& j) {
  auto dim = as_int(field(j, "ambient_dim"), "ambient_dim");
  if (dim <= 0) bad("ambient_dim must be positive");
  std::vector<RatVec> gens;
  for (const auto& g : field(j, "generators")) gens.push_back(vector_from_json(g));
  return Lattice::from_generators(static_cast<std::size_t>(dim), gens);
}

Json signature_json(const Signature& sig) {
  Json out;
  out["ell1"] = sig.ell1();
  out["ell2"] = sig.ell2();
  Json gens = Json::array();
  for (const auto& g : sig.lattice().generators()) gens.push_back(vector_json(g));
  out["gamma_generators"] = gens;
  return out;
}

SignaturePtr signature_from_json(const Json& j) {
  auto l1 = as_int(field(j, "ell1"), "ell1");
  auto l2 = as_int(field(j, "ell2"), "ell2");
  if (l1 < 0 || l2 < 0) bad("ell1 and ell2 must be nonnegative");
  const Json& g = field(j, "gamma_generators");
  if (!g.is_array()) bad("gamma_generators must be an array");
  std::vector<RatVec> gens;
  for (const auto& row : g) gens.push_back(vector_from_json(row));
  return make_signature(static_cast<std::size_t>(l1), static_cast<std::size_t>(l2), gens);
}

Json terms_json(const Element& e) {
  Json out = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json t;
    t["alpha"] = vector_json(alpha_vector(e.sig(), m));
    t["i"] = m.i;
    t["mu"] = m.mu;
    t["coeff"] = rational_json(c);
    out.push_back(t);
  }
  return out;
}

Element terms_from_json(const SignaturePtr& sig, const Json& terms) {
  if (!terms.is_array()) bad("terms must be an array");
  Element out = Element::zero(sig);
  for (const auto& t : terms) {
    RatVec alpha = vector_from_json(field(t, "alpha"));
    if (alpha.size() != sig->ell()) throw Error(ErrorCode::DimensionError, "alpha length differs from ell");
    Monomial m{sig->lattice().require_coordinates(alpha), index_from_json(field(t, "i"), sig->ell(), "i"),
               index_from_json(field(t, "mu"), sig->ell(), "mu")};
    for (std::size_t k = sig->ell1(); k < sig->ell(); ++k)
      if (m.i[k] != 0) throw Error(ErrorCode::DimensionError, "i is nonzero past ell1");
    out.add_term(m, rational_from_json(field(t, "coeff")));
  }
  return out;
}

Json element_json(const Element& e) {
  Json out;
  out["signature"] = signature_json(e.sig());
  out["terms"] = terms_json(e);
  return out;
}

Element element_from_json(const Json& j, const SignaturePtr& sig) {
  SignaturePtr own = signature_from_json(field(j, "signature"));
  if (sig && !(*own == *sig)) throw Error(ErrorCode::SignatureMismatch, "element belongs to another algebra");
  return terms_from_json(sig ? sig : own, field(j, "terms"));
}

Json normal_form_json(const NormalFormAut& a, Mode mode) {
  Json out;
  out["tau"]["G"] = matrix_json(a.tau.G.entries());
  out["tau"]["f"] = vector_json(a.tau.f.values);
  out["u"] = element_json(a.u.u);
  out["v"] = vector_json(a.v.v);
  out["eps"] = a.eps;
  out["mode"] = std::string(mode_name(mode));
  return out;
}

LoadedNormalForm normal_form_from_json(const Json& j) {
  Element u = element_from_json(field(j, "u"));
  const SignaturePtr& sig = u.signature();
  const Json& tau = field(j, "tau");
  Matrix g = matrix_from_json(field(tau, "G"));
  if (g.rows() != sig->ell() || g.cols() != sig->ell()) throw Error(ErrorCode::DimensionError, "G must be ell x ell");
  RatVec f = vector_from_json(field(tau, "f"));
  RatVec v = vector_from_json(field(j, "v"));
  if (f.size() != sig->ell() || v.size() != sig->ell())
    throw Error(ErrorCode::DimensionError, "f and v must have ell entries");
  for (const auto& c : f)
    if (c == 0) bad("character values must be nonzero");
  auto eps = as_int(field(j, "eps"), "eps");
  if (eps != 0 && eps != 1) bad("eps must be 0 or 1");
  Mode mode = j.contains("mode") ? parse_mode(j.at("mode").get<std::string>()) : Mode::Lie;

  BlockMatrix G(g, sig->ell1(), sig->ell2());
  if (!aut2_membership(sig->lattice(), G)) throw Error(ErrorCode::LatticeNotMapped, "G does not stabilize the lattice");
  NormalFormAut a{sig, TauAut{G, Character{f}}, InnerExp::from(u), ShiftV{v}, static_cast<int>(eps)};
  return {a, mode};
}

Json functional_json(const FunctionalAut& phi) {
  const GeneratorImages& im = phi.images;
  Json out;
  out["mode"] = std::string(mode_name(phi.mode));
  out["source"] = signature_json(*im.src);
  out["target"] = signature_json(*im.dst);
  out["one"] = terms_json(phi.one);
  out["images"]["x_pos"] = elements_json(im.x_pos);
  out["images"]["x_neg"] = elements_json(im.x_neg);
  out["images"]["x_poly"] = elements_json(im.x_poly);
  out["images"]["d"] = elements_json(im.d);
  return out;
}

FunctionalAut functional_from_json(const Json& j) {
  Mode mode = parse_mode(field(j, "mode").get<std::string>());
  SignaturePtr src = signature_from_json(field(j, "source"));
  SignaturePtr dst = j.contains("target") ? signature_from_json(j.at("target")) : src;
  if (*dst == *src) dst = src;
  const Json& im = field(j, "images");
  const std::size_t ell = src->ell();
  GeneratorImages images{src,
                         dst,
                         elements_from_json(dst, field(im, "x_pos"), ell, "x_pos"),
                         elements_from_json(dst, field(im, "x_neg"), ell, "x_neg"),
                         elements_from_json(dst, field(im, "x_poly"), src->ell1(), "x_poly"),
                         elements_from_json(dst, field(im, "d"), ell, "d")};
  Element one = j.contains("one") ? terms_from_json(dst, j.at("one")) : Element::one(dst);
  return FunctionalAut{mode, std::move(one), std::move(images)};
}

Json verify_report_json(const VerifyReport& r) {
  Json out;
  out["passed"] = r.passed;
  out["trials"] = r.trials;
  out["seed"] = r.seed;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out["counterexample"] = {{"a", print_element(c.a)},
                             {"b", print_element(c.b)},
                             {"lhs", print_element(c.lhs)},
                             {"rhs", print_element(c.rhs)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json iso_result_json(const IsoSearchResult& r) {
  Json out;
  out["result"] = std::string(kind_name(r.kind));
  out["reason"] = r.reason;
  out["examined"] = r.examined;
  if (r.candidate)
    out["candidate"] = {{"G", matrix_json(r.candidate->G.entries())}, {"f", vector_json(r.candidate->f.values)}};
  else
    out["candidate"] = nullptr;
  return out;
}

Json witness_json(const FaithfulnessWitness& w) {
  Json out;
  out["n"] = w.n;
  out["alpha"] = vector_json(w.alpha);
  out["value"] = print_element(w.value);
  return out;
}

Json growth_rows_json(const Signature& sig, const std::vector<GrowthRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["step"] = r.step;
    row["level"] = r.data.max_level;
    row["i_level"] = r.data.max_i_level;
    if (r.data.empty) {
      row["max_gamma"] = nullptr;
      row["min_gamma"] = nullptr;
    } else {
      row["max_gamma"] = vector_json(sig.lattice().point(r.data.max_gamma));
      row["min_gamma"] = vector_json(sig.lattice().point(r.data.min_gamma));
    }
    out.push_back(row);
  }
  return out;
}

Json ad_behavior_json(const Signature& sig, const AdBehavior& b) {
  Json out;
  out["tag"] = std::string(tag_name(b.tag));
  out["probe"] = b.probe ? Json(print_element(*b.probe)) : Json(nullptr);
  out["growth"] = b.growth ? Json(*b.growth) : Json(nullptr);
  out["rows"] = growth_rows_json(sig, b.rows);
  return out;
}

SessionConfig config_from_json(const Json& j) {
  SessionConfig cfg;
  cfg.signature = signature_from_json(j);
  if (j.contains("mode")) cfg.mode = parse_mode(j.at("mode").get<std::string>());
  if (j.contains("seed")) cfg.seed = static_cast<std::uint64_t>(as_int(j.at("seed"), "seed"));
  if (j.contains("trials")) cfg.bounds.trials = static_cast<int>(as_int(j.at("trials"), "trials"));
  if (j.contains("iso_bound")) cfg.bounds.iso_bound = static_cast<int>(as_int(j.at("iso_bound"), "iso_bound"));
  if (j.contains("iso_cap")) cfg.bounds.iso_cap = static_cast<std::uint64_t>(as_int(j.at("iso_cap"), "iso_cap"));
  if (j.contains("probe_steps"))
    cfg.bounds.probe_steps = static_cast<int>(as_int(j.at("probe_steps"), "probe_steps"));
  return cfg;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

SessionConfig load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

}  // namespace weyl
