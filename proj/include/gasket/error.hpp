#pragma once

#include <stdexcept>
#include <string>

namespace gasket {

enum class ErrorCode {
    NonOmegaBlock,
    VariantUndefined,
    PrecisionExhausted,
    NotParryAdmissible,
    EndsInZeros,
    PreconditionFailed,
    SizeLimit,
    InsufficientData,
    Undecidable,
    Parse,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace gasket
