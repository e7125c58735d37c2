#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace indep {

enum class ErrorKind {
    CycleDetected,
    DuplicateEdge,
    DuplicateLabel,
    UnknownLabel,
    NotExtremal,
    TooLarge,
    NotIndependent,
    NotOrthogonal,
    InvalidPoset,
    NoBounds,
    NotLattice,
    NotExtremalLattice,
    AmbiguousPairing,
    NotTrim,
    Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::NotExtremal: return "NotExtremal";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotIndependent: return "NotIndependent";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::InvalidPoset: return "InvalidPoset";
        case ErrorKind::NoBounds: return "NoBounds";
        case ErrorKind::NotLattice: return "NotLattice";
        case ErrorKind::NotExtremalLattice: return "NotExtremalLattice";
        case ErrorKind::AmbiguousPairing: return "AmbiguousPairing";
        case ErrorKind::NotTrim: return "NotTrim";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace indep
