#pragma once

#include <stdexcept>
#include <string>

namespace simflat {

enum class Err {
  RankDeficient,
  SingularForm,
  DimMismatch,
  NotPositiveDefinite,
  NotIntegral,
  OrderCapExceeded,
  ReducibleEndomorphism,
  NotInvariant,
  ChainDiverged,
  NotHomogeneous,
  BadParameter,
  UnsupportedField,
  MalformedEntry,
  BadInput,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace simflat
