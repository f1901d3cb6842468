#pragma once

#include <stdexcept>
#include <string>

namespace mixsurf {

// Every failure the library can signal. Input-side codes map to CLI exit 2,
// internal codes (violated runtime invariants) to exit 3.
enum class errc {
  not_a_group,
  not_a_subgroup,
  not_a_permutation,
  group_too_large,
  not_normal,
  not_abelian,
  index_not_two,
  embedding_failure,
  relation_failure,
  not_generating,
  bad_elliptic_order,
  non_integral_genus,
  tau_prime_inside_g0,
  group_mismatch,
  kernel_not_admissible,
  not_semi_isogenous,
  non_integral_data,
  non_integral_result,
  chain_too_long,
  parse_error,
  schema_error,
  word_out_of_range,
  family_unknown,
  budget_exceeded,
  theorem_violation,
};

const char* errc_name(errc code);

// True for codes that signal a bug or a violated theorem-level invariant
// rather than bad input.
bool errc_internal(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }
  bool internal() const noexcept { return errc_internal(code_); }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

// Runtime guard for invariants the construction is supposed to force.
inline void check_theorem(bool condition, const std::string& what) {
  if (!condition) fail(errc::theorem_violation, what);
}

}  // namespace mixsurf
