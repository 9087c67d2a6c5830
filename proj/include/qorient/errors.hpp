// Copyright 2026 The qorient Authors
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

#pragma once

#include <stdexcept>

namespace qorient {

/// Base class of every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operator would exceed the supported register size.
struct CapacityError : Error {
    using Error::Error;
};

/// A rotation generator is not a Hermitian Pauli string.
struct InvalidGenerator : Error {
    using Error::Error;
};

/// Two blend axes do not anticommute.
struct InvalidAxis : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidAngle : Error {
    using Error::Error;
};

/// Qubit index out of range or repeated within one operation.
struct InvalidQubit : Error {
    using Error::Error;
};

/// A value violates a documented range (error strength, sweep window, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace qorient
