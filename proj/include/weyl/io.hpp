#pragma once

// JSON forms of every value type. Rationals travel as canonical "p/q" or
// "n" strings; objects keep a fixed key order so output is diffable.

#include <string>

#include <nlohmann/json.hpp>

#include "weyl/automorphism.hpp"
#include "weyl/classification.hpp"
#include "weyl/expr.hpp"

namespace weyl {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
/// Accepts canonical strings and plain JSON integers.
Rational rational_from_json(const Json& j);
Json vector_json(const RatVec& v);
RatVec vector_from_json(const Json& j);
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json lattice_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

/// {"ell1", "ell2", "gamma_generators"}.
Json signature_json(const Signature& sig);
SignaturePtr signature_from_json(const Json& j);

Json terms_json(const Element& e);
Element terms_from_json(const SignaturePtr& sig, const Json& terms);
Json element_json(const Element& e);
/// When `sig` is given the embedded signature must describe the same algebra.
Element element_from_json(const Json& j, const SignaturePtr& sig = nullptr);

Json normal_form_json(const NormalFormAut& a, Mode mode);
struct LoadedNormalForm {
  NormalFormAut aut;
  Mode mode;
};
LoadedNormalForm normal_form_from_json(const Json& j);

Json functional_json(const FunctionalAut& phi);
FunctionalAut functional_from_json(const Json& j);

Json verify_report_json(const VerifyReport& r);
Json iso_result_json(const IsoSearchResult& r);
Json witness_json(const FaithfulnessWitness& w);
/// Γ-degrees are written as α vectors of `sig`.
Json growth_rows_json(const Signature& sig, const std::vector<GrowthRow>& rows);
Json ad_behavior_json(const Signature& sig, const AdBehavior& b);

/// Session config file: the signature keys plus optional "mode", "seed",
/// "trials", "iso_bound", "iso_cap" and "probe_steps".
SessionConfig config_from_json(const Json& j);
SessionConfig load_config(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace weyl
