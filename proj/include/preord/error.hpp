#pragma once

#include <stdexcept>
#include <string>

namespace preord {

enum class Err {
  InvalidTopology,
  SizeMismatch,
  InstanceTooLarge,
  PointOutOfRange,
  NotASubrelation,
  NotNormal,
  NotConvex,
  NotCompletelyRegular,
  NotDiscrete,
  NotAQPM,
  BadArguments,
  BadParameters,
  UnknownPredicate,
  WindowOutOfRange,
  ParseError,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidTopology: return "InvalidTopology";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::InstanceTooLarge: return "InstanceTooLarge";
    case Err::PointOutOfRange: return "PointOutOfRange";
    case Err::NotASubrelation: return "NotASubrelation";
    case Err::NotNormal: return "NotNormal";
    case Err::NotConvex: return "NotConvex";
    case Err::NotCompletelyRegular: return "NotCompletelyRegular";
    case Err::NotDiscrete: return "NotDiscrete";
    case Err::NotAQPM: return "NotAQPM";
    case Err::BadArguments: return "BadArguments";
    case Err::BadParameters: return "BadParameters";
    case Err::UnknownPredicate: return "UnknownPredicate";
    case Err::WindowOutOfRange: return "WindowOutOfRange";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "?";
}

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace preord
