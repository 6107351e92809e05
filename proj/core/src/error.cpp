#include "gammacrit/error.hpp"

namespace gammacrit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EdgeNotInGraph: return "EdgeNotInGraph";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::NotATree: return "NotATree";
    case Errc::Disconnected: return "Disconnected";
    case Errc::Infeasible: return "Infeasible";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EnumerationTruncated: return "EnumerationTruncated";
    case Errc::Budget: return "Budget";
    case Errc::BadParams: return "BadParams";
    case Errc::StatusMismatch: return "StatusMismatch";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gammacrit
