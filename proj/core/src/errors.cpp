#include "mvtsp/errors.hpp"

namespace mvtsp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyInstance: return "EmptyInstance";
    case Errc::NegativeCost: return "NegativeCost";
    case Errc::CostTooLarge: return "CostTooLarge";
    case Errc::DemandMismatch: return "DemandMismatch";
    case Errc::ZeroVisit: return "ZeroVisit";
    case Errc::BadFormat: return "BadFormat";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::NotEulerian: return "NotEulerian";
    case Errc::NotReachable: return "NotReachable";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ExtractionStalled: return "ExtractionStalled";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

}  // namespace mvtsp
