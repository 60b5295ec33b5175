#include "toruskit/errors.hpp"

namespace toruskit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::NotAVertex: return "NotAVertex";
    case Errc::NotPointed: return "NotPointed";
    case Errc::DependentInput: return "DependentInput";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::FanMismatch: return "FanMismatch";
    case Errc::IncompleteFan: return "IncompleteFan";
    case Errc::NotSmooth: return "NotSmooth";
    case Errc::NotCartier: return "NotCartier";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::StabilizerNotTrivial: return "StabilizerNotTrivial";
    case Errc::OnDivisor: return "OnDivisor";
    case Errc::Unbounded: return "Unbounded";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::RayOutsideSupport: return "RayOutsideSupport";
  }
  return "Unknown";
}

}  // namespace toruskit
