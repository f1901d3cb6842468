#include "mixsurf/error.hpp"

namespace mixsurf {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_a_group: return "NotAGroup";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::not_a_permutation: return "NotAPermutation";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::not_normal: return "NotNormal";
    case errc::not_abelian: return "NotAbelian";
    case errc::index_not_two: return "IndexNotTwo";
    case errc::embedding_failure: return "EmbeddingFailure";
    case errc::relation_failure: return "RelationFailure";
    case errc::not_generating: return "NotGenerating";
    case errc::bad_elliptic_order: return "BadEllipticOrder";
    case errc::non_integral_genus: return "NonIntegralGenus";
    case errc::tau_prime_inside_g0: return "TauPrimeInsideG0";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::kernel_not_admissible: return "KernelNotAdmissible";
    case errc::not_semi_isogenous: return "NotSemiIsogenous";
    case errc::non_integral_data: return "NonIntegralData";
    case errc::non_integral_result: return "NonIntegralResult";
    case errc::chain_too_long: return "ChainTooLong";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
    case errc::word_out_of_range: return "WordOutOfRange";
    case errc::family_unknown: return "FamilyUnknown";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::theorem_violation: return "TheoremViolation";
  }
  return "UnknownError";
}

bool errc_internal(errc code) {
  switch (code) {
    case errc::embedding_failure:
    case errc::non_integral_genus:
    case errc::non_integral_result:
    case errc::theorem_violation:
      return true;
    default:
      return false;
  }
}

}  // namespace mixsurf
