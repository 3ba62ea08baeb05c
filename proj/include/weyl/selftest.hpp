#pragma once

// Property suites run by `weyl selftest`. Each works on the desk algebra
// W(1,1,Γ), Γ = ⟨(1,0),(0,1),(1/2,1/2)⟩, with exact comparisons only.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/algebra.hpp"

namespace weyl {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;   // e.g. "200 triples"
  std::string failure;  // first failing case, empty on success
};

SignaturePtr desk_signature();

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
SuiteResult run_suite(std::string_view name, std::uint64_t seed);

/// "PASS name (detail)" or "FAIL name (detail): failure".
std::string format_suite(const SuiteResult& r);

}  // namespace weyl
