#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace catspec {

// Thrown when an input violates an operation's precondition (unknown id,
// mismatched endpoints, missing witness, ...).
class spec_error : public std::runtime_error {
 public:
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exhaustive check refuses an input that exceeds the
// configured size bound.  Distinct from spec_error so callers can tell
// "too big" apart from "malformed".
class guardrail_error : public std::runtime_error {
 public:
  explicit guardrail_error(const std::string& what) : std::runtime_error(what) {}
};

// Size bound for exhaustive checks.  The default can be overridden with the
// CATSPEC_MAX_MORPHISMS environment variable or per call site.
struct Limits {
  std::size_t max_morphisms = 5000;

  static Limits from_env();
};

void require_within(std::size_t morphism_count, const Limits& lim, const std::string& where);

}  // namespace catspec
