#ifndef RMGEO_ERROR_HPP
#define RMGEO_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rmgeo {

enum class ErrorKind {
  invalid_radicand,
  incompatible_fields,
  division_by_zero,
  invalid_input,
  undecidable_input,
  invalid_discriminant,
  incompatible_forms,
  not_invertible,
  degenerate_point,
  not_transverse,
  invalid_modulus,
  squarefree_required,
  not_totally_real,
  wrong_signature,
  parse_error,
  budget_exceeded,
};

std::string_view to_string(ErrorKind kind);

// All domain failures raised by the library carry a kind so that callers
// (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Process-wide cap on iterations of any single unbounded loop (cycle walks,
// reductions, searches). Zero means unlimited.
void set_step_budget(std::uint64_t steps);
std::uint64_t step_budget();

class StepCounter {
 public:
  explicit StepCounter(std::string_view what) : what_(what), limit_(step_budget()) {}

  void tick() {
    if (limit_ != 0 && ++count_ > limit_)
      throw Error(ErrorKind::budget_exceeded, std::string(what_));
  }

 private:
  std::string_view what_;
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

}  // namespace rmgeo

#endif  // RMGEO_ERROR_HPP
