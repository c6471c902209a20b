#include "rmgeo/error.hpp"

#include <atomic>

namespace rmgeo {

namespace {
std::atomic<std::uint64_t> g_step_budget{50'000'000};
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_radicand: return "invalid-radicand";
    case ErrorKind::incompatible_fields: return "incompatible-fields";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::undecidable_input: return "undecidable-input";
    case ErrorKind::invalid_discriminant: return "invalid-discriminant";
    case ErrorKind::incompatible_forms: return "incompatible-forms";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::degenerate_point: return "degenerate-point";
    case ErrorKind::not_transverse: return "not-transverse";
    case ErrorKind::invalid_modulus: return "invalid-modulus";
    case ErrorKind::squarefree_required: return "squarefree-required";
    case ErrorKind::not_totally_real: return "not-totally-real";
    case ErrorKind::wrong_signature: return "wrong-signature";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

void set_step_budget(std::uint64_t steps) { g_step_budget.store(steps, std::memory_order_relaxed); }

std::uint64_t step_budget() { return g_step_budget.load(std::memory_order_relaxed); }

}  // namespace rmgeo
