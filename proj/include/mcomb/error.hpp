#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcomb {

enum class ErrorCode {
    EmptyInput,
    OddLength,
    NonDoubleOccurrence,
    InvalidToken,
    ChordOutOfRange,
    ParityViolation,
    NotIsomorphic,
    SizeLimitExceeded,
    FaceNotInCatalog,
    NegativeBetti,
    CacheInvalid,
    Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mcomb
