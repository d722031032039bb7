#pragma once

#include <stdexcept>
#include <string>

namespace dragoncrypto {

// Every failure the library can report. The values double as CLI exit codes
// (0 = success, 1 = I/O or unexpected error, 2 = usage error).
enum class ErrorCode : int {
  kParameterError = 3,
  kMalformedKey = 4,
  kInvalidKeyParameters = 5,
  kMalformedCiphertext = 6,
  kKeyMismatch = 7,
  kInvalidCodePoint = 8,
  kCodePointOutOfRange = 9,
  kBlockTooLong = 10,
  kMessageTooLarge = 11,
  kEncodeFailure = 12,
  kIterationOutOfRange = 13,
  kNotAResidue = 14,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

#define DRAGONCRYPTO_DEFINE_ERROR(Name)                    \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string& message)              \
        : Error(ErrorCode::k##Name, message) {}            \
  }

DRAGONCRYPTO_DEFINE_ERROR(ParameterError);
DRAGONCRYPTO_DEFINE_ERROR(MalformedKey);
DRAGONCRYPTO_DEFINE_ERROR(InvalidKeyParameters);
DRAGONCRYPTO_DEFINE_ERROR(MalformedCiphertext);
DRAGONCRYPTO_DEFINE_ERROR(KeyMismatch);
DRAGONCRYPTO_DEFINE_ERROR(InvalidCodePoint);
DRAGONCRYPTO_DEFINE_ERROR(CodePointOutOfRange);
DRAGONCRYPTO_DEFINE_ERROR(BlockTooLong);
DRAGONCRYPTO_DEFINE_ERROR(MessageTooLarge);
DRAGONCRYPTO_DEFINE_ERROR(EncodeFailure);
DRAGONCRYPTO_DEFINE_ERROR(IterationOutOfRange);
DRAGONCRYPTO_DEFINE_ERROR(NotAResidue);

#undef DRAGONCRYPTO_DEFINE_ERROR

}  // namespace dragoncrypto
