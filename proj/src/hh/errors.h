// Copyright 2026 The Hidden History Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HH_ERRORS_H
#define HH_ERRORS_H

#include <stdexcept>
#include <string>

namespace hh {

enum class ErrorKind {
    InvalidArgument,
    Config,
    DimensionCap,
    Numeric,
    Io,
};

/// Base class for every error thrown by the core. The C API maps `kind()`
/// onto its status codes.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

class InvalidArgument : public Error {
   public:
    explicit InvalidArgument(const std::string& message) : Error(ErrorKind::InvalidArgument, message) {}
};

class ConfigError : public Error {
   public:
    explicit ConfigError(const std::string& message) : Error(ErrorKind::Config, message) {}
};

/// A dense 2^l x 2^l object was requested above the configured cap.
class DimensionCapExceeded : public Error {
   public:
    explicit DimensionCapExceeded(const std::string& message) : Error(ErrorKind::DimensionCap, message) {}
};

/// Max-flow deficit, scaling non-convergence, non-finite amplitudes.
class NumericError : public Error {
   public:
    explicit NumericError(const std::string& message) : Error(ErrorKind::Numeric, message) {}
};

class IoError : public Error {
   public:
    explicit IoError(const std::string& message) : Error(ErrorKind::Io, message) {}
};

}  // namespace hh

#endif
