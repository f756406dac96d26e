#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossext {

enum class ErrorCode {
    ShapeMismatch,
    AntisymFail,
    JacobiFail,
    LeibnizFail,
    ModuleAxiomFail,
    NotEquivariant,
    NotExact,
    NotACocycle,
    EquivarianceFail,
    PeifferFail,
    SectionMismatch,
    SquareFail,
    NotLieMap,
    NotIdentityOnG,
    NotIdentityOnM,
    CoconeMismatch,
    ExactnessFail,
    NotGModuleMap,
    BaseNotCrossed,
    LengthMismatch,
    BaseMismatch,
    ParseError,
    UnresolvedReference,
    ValidationFail,
};

inline std::string_view code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
        case ErrorCode::AntisymFail: return "ANTISYM_FAIL";
        case ErrorCode::JacobiFail: return "JACOBI_FAIL";
        case ErrorCode::LeibnizFail: return "LEIBNIZ_FAIL";
        case ErrorCode::ModuleAxiomFail: return "MODULE_AXIOM_FAIL";
        case ErrorCode::NotEquivariant: return "NOT_EQUIVARIANT";
        case ErrorCode::NotExact: return "NOT_EXACT";
        case ErrorCode::NotACocycle: return "NOT_A_COCYCLE";
        case ErrorCode::EquivarianceFail: return "EQUIVARIANCE_FAIL";
        case ErrorCode::PeifferFail: return "PEIFFER_FAIL";
        case ErrorCode::SectionMismatch: return "SECTION_MISMATCH";
        case ErrorCode::SquareFail: return "SQUARE_FAIL";
        case ErrorCode::NotLieMap: return "NOT_LIE_MAP";
        case ErrorCode::NotIdentityOnG: return "NOT_IDENTITY_ON_G";
        case ErrorCode::NotIdentityOnM: return "NOT_IDENTITY_ON_M";
        case ErrorCode::CoconeMismatch: return "COCONE_MISMATCH";
        case ErrorCode::ExactnessFail: return "EXACTNESS_FAIL";
        case ErrorCode::NotGModuleMap: return "NOT_G_MODULE_MAP";
        case ErrorCode::BaseNotCrossed: return "BASE_NOT_CROSSED";
        case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
        case ErrorCode::BaseMismatch: return "BASE_MISMATCH";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::UnresolvedReference: return "UNRESOLVED_REFERENCE";
        case ErrorCode::ValidationFail: return "VALIDATION_FAIL";
    }
    return "UNKNOWN";
}

/// A failed check together with the first witness found (basis indices,
/// node positions, ...). Witnesses are reported in lexicographic order, so
/// the first one is deterministic.
struct Violation {
    ErrorCode code;
    std::vector<std::size_t> witness;
    std::string detail;

    [[nodiscard]] std::string to_string() const {
        std::string s(code_name(code));
        if (!witness.empty()) {
            s += "(";
            for (std::size_t i = 0; i < witness.size(); ++i) {
                if (i != 0) s += ",";
                s += std::to_string(witness[i]);
            }
            s += ")";
        }
        if (!detail.empty()) s += ": " + detail;
        return s;
    }
};

using CheckResult = std::optional<Violation>;

class Error : public std::runtime_error {
public:
    explicit Error(Violation v) : std::runtime_error(v.to_string()), violation_(std::move(v)) {}
    Error(ErrorCode code, std::string detail, std::vector<std::size_t> witness = {})
        : Error(Violation{code, std::move(witness), std::move(detail)}) {}

    [[nodiscard]] const Violation& violation() const { return violation_; }
    [[nodiscard]] ErrorCode code() const { return violation_.code; }

private:
    Violation violation_;
};

inline void throw_if(const CheckResult& r) {
    if (r) throw Error(*r);
}

}  // namespace crossext
