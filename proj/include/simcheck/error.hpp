#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simcheck {

struct SourceLoc {
  int line = 0;
  int col = 0;

  bool valid() const { return line > 0; }
  friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

enum class ErrorCode {
  // frontend
  SyntaxError,
  UnsupportedConstruct,
  UnknownModule,
  UnknownSignal,
  PortMismatch,
  CombinationalCycle,
  RecursiveInstance,
  MultipleDrivers,
  UndrivenNet,
  MultipleClocks,
  WidthMismatch,
  Redeclared,
  NotAReg,
  // aig / sim
  LengthMismatch,
  // vcd
  MalformedVcd,
  DuplicateIdCode,
  NoClockEdges,
  // sat
  UnallocatedVar,
  NoModel,
  // check engine
  NoFailSignals,
  ResetNeverDeasserts,
  MissingWaveSignal,
  BudgetExhausted,
  NothingToBind,
  NoMonitoredFails,
  ReplayMismatch,
  StrategyViolation,
  TooManyFreeBits,
  // config
  BadTag,
  IoError,
  UnknownStrategy,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `loc` is set for source-level
/// diagnostics (Verilog); `offset` is the byte offset for VCD input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg, SourceLoc loc = {})
      : std::runtime_error(msg), code_(code), loc_(loc) {}

  ErrorCode code() const { return code_; }
  const SourceLoc& loc() const { return loc_; }

 private:
  ErrorCode code_;
  SourceLoc loc_;
};

}  // namespace simcheck
