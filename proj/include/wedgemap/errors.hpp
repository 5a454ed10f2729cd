#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wedgemap {

/// Malformed input or incompatible shapes. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Why a mathematical precondition failed.
enum class Reason {
  ZeroVector,
  RelationViolation,
  Divisibility,
  UnsupportedGrade,
  DiscriminantMismatch,
  NonPrimitive,
  NotDefinite,
  ZeroLeadingCoefficient,
  NotProportional,
  CongruencePrecondition,
  InvalidDiscriminant,
  Internal,
};

constexpr std::string_view reason_tag(Reason r) {
  switch (r) {
    case Reason::ZeroVector: return "zero-vector";
    case Reason::RelationViolation: return "relation-violation";
    case Reason::Divisibility: return "divisibility-failure";
    case Reason::UnsupportedGrade: return "unsupported-grade";
    case Reason::DiscriminantMismatch: return "discriminant-mismatch";
    case Reason::NonPrimitive: return "non-primitive";
    case Reason::NotDefinite: return "not-definite";
    case Reason::ZeroLeadingCoefficient: return "zero-leading-coefficient";
    case Reason::NotProportional: return "not-proportional";
    case Reason::CongruencePrecondition: return "congruence-precondition";
    case Reason::InvalidDiscriminant: return "invalid-discriminant";
    case Reason::Internal: return "internal";
  }
  return "unknown";
}

/// A mathematical precondition failed (non-membership, mismatched
/// discriminants, ...). The CLI maps this to exit code 2.
class MathError : public std::runtime_error {
 public:
  MathError(Reason reason, const std::string& detail)
      : std::runtime_error(std::string(reason_tag(reason)) + ": " + detail),
        reason_(reason),
        detail_(detail) {}

  Reason reason() const noexcept { return reason_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Reason reason_;
  std::string detail_;
};

}  // namespace wedgemap
