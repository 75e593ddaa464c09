#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsr {

enum class Errc {
  // ring construction and validation
  BadTableShape,
  NotAbelianGroup,
  NotAssociative,
  NotDistributive,
  OrderCapExceeded,
  RingMismatch,
  ParseError,
  // ideal engine / radical
  NotProper,
  NotARegulator,
  TheoremViolation,
  // localized rationals
  ZeroDenominator,
  DenominatorNotCoprimeTo6,
  NotAUnit,
  NotInR0,
  InRadical,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadTableShape: return "BadTableShape";
    case Errc::NotAbelianGroup: return "NotAbelianGroup";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::NotProper: return "NotProper";
    case Errc::NotARegulator: return "NotARegulator";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DenominatorNotCoprimeTo6: return "DenominatorNotCoprimeTo6";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotInR0: return "NotInR0";
    case Errc::InRadical: return "InRadical";
  }
  return "Unknown";
}

}  // namespace qsr
