#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace supercong {

enum class Errc {
  NotInvertible,
  NotPIntegral,
  NotAUnit,
  Supersingular,
  PrecisionLoss,
  DegenerateLambda,
  BadReduction,
  TooLarge,
  CompositionAtUnit,
  NotReversible,
  IndexOutOfRange,
  NotOrdinary,
  NotCM,
  NoFourthRoot,
  PTooSmall,
  InvalidArgument,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotPIntegral: return "NotPIntegral";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::Supersingular: return "Supersingular";
    case Errc::PrecisionLoss: return "PrecisionLoss";
    case Errc::DegenerateLambda: return "DegenerateLambda";
    case Errc::BadReduction: return "BadReduction";
    case Errc::TooLarge: return "TooLarge";
    case Errc::CompositionAtUnit: return "CompositionAtUnit";
    case Errc::NotReversible: return "NotReversible";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotOrdinary: return "NotOrdinary";
    case Errc::NotCM: return "NotCM";
    case Errc::NoFourthRoot: return "NoFourthRoot";
    case Errc::PTooSmall: return "PTooSmall";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

inline bool errc_from_string(std::string_view text, Errc& out) {
  for (int i = 0; i <= static_cast<int>(Errc::InvalidArgument); ++i) {
    if (to_string(static_cast<Errc>(i)) == text) {
      out = static_cast<Errc>(i);
      return true;
    }
  }
  return false;
}

// Raised by the arithmetic and checker layers; `code()` is what callers branch on.
class ArithmeticError : public std::domain_error {
 public:
  ArithmeticError(Errc code, const std::string& what)
      : std::domain_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Malformed textual input. `position` is a 0-based offset into the parsed string.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  // The text without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw ArithmeticError(code, what);
}

}  // namespace supercong
