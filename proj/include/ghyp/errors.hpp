#pragma once

#include <stdexcept>
#include <string>

namespace ghyp {

enum class Errc {
  EmptyGraph,            // no edges and no declared vertex
  Disconnected,          // input graph is not connected
  SimpleModeViolation,   // loop or duplicate edge in Simple mode
  LoopContraction,       // contraction of a loop requested
  WouldDisconnect,       // deletion of a cut edge requested
  NotProperCycles,       // cactus closed form applied outside cacti
  SideNotGeodesic,       // triangle side whose length exceeds the distance
  InvalidSpec,           // generator parameters out of range
  BudgetExceeded,        // exhaustive sweep beyond the configured budget
  BadInput,              // unreadable file / malformed text
  Unsupported,           // structural limit (e.g. too many vertices)
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  Errc code;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace ghyp
