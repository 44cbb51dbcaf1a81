#pragma once

#include <stdexcept>
#include <string>

namespace zgap {

// Base for every error the library raises. code() is stable and used in the
// CLI's machine-readable error records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define ZGAP_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

ZGAP_DEFINE_ERROR(DomainError)
ZGAP_DEFINE_ERROR(NoBracket)
ZGAP_DEFINE_ERROR(LimitTooLarge)
ZGAP_DEFINE_ERROR(TableTooSmall)
ZGAP_DEFINE_ERROR(TooCloseToZero)
ZGAP_DEFINE_ERROR(CountMismatch)
ZGAP_DEFINE_ERROR(OutOfRange)
ZGAP_DEFINE_ERROR(TooFewZeros)
ZGAP_DEFINE_ERROR(SupportTooLarge)
ZGAP_DEFINE_ERROR(KTooLarge)

#undef ZGAP_DEFINE_ERROR

}  // namespace zgap
