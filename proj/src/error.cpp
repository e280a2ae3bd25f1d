#include "simcheck/error.hpp"

namespace simcheck {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::UnknownModule: return "UnknownModule";
    case ErrorCode::UnknownSignal: return "UnknownSignal";
    case ErrorCode::PortMismatch: return "PortMismatch";
    case ErrorCode::CombinationalCycle: return "CombinationalCycle";
    case ErrorCode::RecursiveInstance: return "RecursiveInstance";
    case ErrorCode::MultipleDrivers: return "MultipleDrivers";
    case ErrorCode::UndrivenNet: return "UndrivenNet";
    case ErrorCode::MultipleClocks: return "MultipleClocks";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::Redeclared: return "Redeclared";
    case ErrorCode::NotAReg: return "NotAReg";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MalformedVcd: return "MalformedVcd";
    case ErrorCode::DuplicateIdCode: return "DuplicateIdCode";
    case ErrorCode::NoClockEdges: return "NoClockEdges";
    case ErrorCode::UnallocatedVar: return "UnallocatedVar";
    case ErrorCode::NoModel: return "NoModel";
    case ErrorCode::NoFailSignals: return "NoFailSignals";
    case ErrorCode::ResetNeverDeasserts: return "ResetNeverDeasserts";
    case ErrorCode::MissingWaveSignal: return "MissingWaveSignal";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NothingToBind: return "NothingToBind";
    case ErrorCode::NoMonitoredFails: return "NoMonitoredFails";
    case ErrorCode::ReplayMismatch: return "ReplayMismatch";
    case ErrorCode::StrategyViolation: return "StrategyViolation";
    case ErrorCode::TooManyFreeBits: return "TooManyFreeBits";
    case ErrorCode::BadTag: return "BadTag";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnknownStrategy: return "UnknownStrategy";
  }
  return "Unknown";
}

}  // namespace simcheck
