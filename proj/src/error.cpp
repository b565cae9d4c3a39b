#include "om/error.hpp"

namespace om {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotGraded: return "NotGraded";
    case Errc::NotEssential: return "NotEssential";
    case Errc::ZeroNormal: return "ZeroNormal";
    case Errc::DegenerateChirotope: return "DegenerateChirotope";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::AxiomFailure: return "AxiomFailure";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NotAntisymmetric: return "NotAntisymmetric";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::InvalidCell: return "InvalidCell";
    case Errc::InvalidComplex: return "InvalidComplex";
    case Errc::ConsistencyFailure: return "ConsistencyFailure";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotATope: return "NotATope";
    case Errc::EquivalenceViolation: return "EquivalenceViolation";
    case Errc::ComparisonFailure: return "ComparisonFailure";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::SizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

}  // namespace om
