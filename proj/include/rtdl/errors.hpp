#pragma once

#include <stdexcept>

namespace rtdl {

// Error taxonomy mirrored by the CLI exit codes:
//   ConfigError -> 2, FormatError -> 3, NumericError -> 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or truncated data files (feature containers, manifests,
// checkpoints, prediction files).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values produced by a numerical primitive or optimizer step.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor shape violations inside graph construction.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rtdl
