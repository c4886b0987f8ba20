#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
    ZeroVector,
    DimensionMismatch,
    InvalidPolytope,
    EmptyInterior,
    DimensionLimit,
    OddPolytope,
    NonSquareInvariant,
    NegativeInvariant,
    InvalidSlice,
    SliceOutsidePolytope,
    NonPrimitiveImage,
    NotDelzant,
    NotCompact,
    NotMonotone,
    ModelMismatch,
    MarkedPointMismatch,
    ReducedPolytopeMismatch,
    BoundNotIntegral,
    KindMismatch,
    UnsupportedClaim,
    UnboundedProbe,
    NotOnFacet,
    NotTransverse,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidPolytope: return "InvalidPolytope";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::DimensionLimit: return "DimensionLimit";
    case ErrorCode::OddPolytope: return "OddPolytope";
    case ErrorCode::NonSquareInvariant: return "NonSquareInvariant";
    case ErrorCode::NegativeInvariant: return "NegativeInvariant";
    case ErrorCode::InvalidSlice: return "InvalidSlice";
    case ErrorCode::SliceOutsidePolytope: return "SliceOutsidePolytope";
    case ErrorCode::NonPrimitiveImage: return "NonPrimitiveImage";
    case ErrorCode::NotDelzant: return "NotDelzant";
    case ErrorCode::NotCompact: return "NotCompact";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::MarkedPointMismatch: return "MarkedPointMismatch";
    case ErrorCode::ReducedPolytopeMismatch: return "ReducedPolytopeMismatch";
    case ErrorCode::BoundNotIntegral: return "BoundNotIntegral";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::UnsupportedClaim: return "UnsupportedClaim";
    case ErrorCode::UnboundedProbe: return "UnboundedProbe";
    case ErrorCode::NotOnFacet: return "NotOnFacet";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message adds context for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace toric
