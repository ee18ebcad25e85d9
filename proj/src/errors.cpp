#include "halfint/errors.hpp"

namespace halfint {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Singular: return "Singular";
    case Errc::BadLevel: return "BadLevel";
    case Errc::BadWeight: return "BadWeight";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::InsufficientRows: return "InsufficientRows";
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::PrecisionTooSmall: return "PrecisionTooSmall";
    case Errc::NoPivotInWindow: return "NoPivotInWindow";
    case Errc::PivotViolation: return "PivotViolation";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::EmptyWindow: return "EmptyWindow";
    case Errc::ParseError: return "ParseError";
    case Errc::FieldSpecError: return "FieldSpecError";
    case Errc::BadArgument: return "BadArgument";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace halfint
