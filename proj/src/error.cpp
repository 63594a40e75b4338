#include "gasket/error.hpp"

namespace gasket {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonOmegaBlock: return "NonOmegaBlock";
        case ErrorCode::VariantUndefined: return "VariantUndefined";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::NotParryAdmissible: return "NotParryAdmissible";
        case ErrorCode::EndsInZeros: return "EndsInZeros";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::Undecidable: return "Undecidable";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace gasket
