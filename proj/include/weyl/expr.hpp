#pragma once

// Text surface for elements:
//   element := ("+"|"-")? term (("+"|"-") term)*
//   term    := scalar | (scalar "*")? factor ("*" factor)*
//   factor  := "x[" vector (";" natvector)? "]" | "d" nat ("^" nat)?
//            | "[" element "," element "]" | "(" element ")"
//   scalar  := nat ("/" posint)?     vector := "(" (rational ("," rational)*)? ")"
// "()" stands for the zero vector. ī may be given with ℓ₁ or ℓ entries.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/automorphism.hpp"
#include "weyl/error.hpp"

namespace weyl {

struct SearchBounds {
  int trials = 100;        // random products per verification
  int iso_bound = 2;       // entry bound for the isomorphism search
  std::uint64_t iso_cap = 2'000'000;
  int probe_steps = 5;
};

struct SessionConfig {
  SignaturePtr signature;
  Mode mode = Mode::Lie;  // verification semantics for automorphism commands
  std::uint64_t seed = 1;
  SearchBounds bounds;
};

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourcePos pos, std::set<std::string> expected, std::string found);

  SourcePos position() const { return pos_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourcePos pos_;
  std::set<std::string> expected_;
  std::string found_;
};

struct ExprAst {
  enum class Kind { Sum, Product, Scalar, GenX, GenD, Bracket, Paren };

  Kind kind;
  SourcePos pos;
  std::vector<ExprAst> children;
  std::vector<bool> negated;  // Sum only, parallel to children
  Rational value;             // Scalar
  RatVec alpha;               // GenX
  std::optional<MultiIndex> i;
  std::size_t index = 0;      // GenD, one-based
  std::int32_t power = 1;

  /// Structural rendering, e.g. "Product(GenX((1,0)), GenD(1,2))".
  std::string describe() const;
};

/// Throws SyntaxError or Error(DimensionError).
ExprAst parse_element(std::string_view src, const SessionConfig& cfg);

/// Throws NotMember for α outside Γ and DimensionError for ī past ℓ₁.
Element eval_expr(const ExprAst& ast, const SessionConfig& cfg);

Element parse_and_eval(std::string_view src, const SessionConfig& cfg);

/// Canonical text: terms in canonical order joined by " + " / " - ",
/// factors joined by " * ", "0" for the zero element.
std::string print_element(const Element& e);

}  // namespace weyl
