#pragma once

#include <stdexcept>
#include <string>

namespace deckrec {

/// A deck whose counts cannot have come from any sequence with the stated
/// (n, k): totals off, or an exact division in the deck algebra left a
/// remainder.
class InconsistentDeckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// First pipeline stage at which a single-trace decode failed.
enum class DecodeStage { WeightConflict, InexactMoments, RootFailure };

inline const char* stage_label(DecodeStage s) {
    switch (s) {
        case DecodeStage::WeightConflict: return "WEIGHT_CONFLICT";
        case DecodeStage::InexactMoments: return "INEXACT_MOMENTS";
        case DecodeStage::RootFailure: return "ROOT_FAILURE";
    }
    return "UNKNOWN";
}

class ReconstructError : public std::runtime_error {
public:
    ReconstructError(DecodeStage stage, const std::string& what)
        : std::runtime_error(std::string(stage_label(stage)) + ": " + what),
          stage_(stage) {}
    DecodeStage stage() const { return stage_; }

private:
    DecodeStage stage_;
};

/// Checksum decoder found no single-zero insertion matching the syndrome.
class ChecksumMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Traces that cannot all come from one source (length or weight mismatch).
class IncompatibleTracesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Refusal to start a computation whose size exceeds the configured cap.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace deckrec
