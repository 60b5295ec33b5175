#pragma once

#include <stdexcept>
#include <string>

namespace toruskit {

enum class Errc {
  ParseError,
  NotAVertex,
  NotPointed,
  DependentInput,
  NotFullDimensional,
  FanMismatch,
  IncompleteFan,
  NotSmooth,
  NotCartier,
  RankMismatch,
  StabilizerNotTrivial,
  OnDivisor,
  Unbounded,
  BoundTooLarge,
  CapExceeded,
  RayOutsideSupport,
};

const char* errc_name(Errc c);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw DomainError(code, what);
}

}  // namespace toruskit
