// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rds {

/// Evaluation or shift request falls outside the stored window of a path.
class WindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments leave the domain on which a closed-form flow is defined
/// (backward blow-up, radial profile below its minimum, missing period tag).
class FlowDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File read/write failure (CLI exit code 3).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rds
