// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace slicecast {

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dataset descriptor is malformed or disagrees with the payload.
class descriptor_error : public error {
  public:
    using error::error;
};

/// Unsupported scalar encoding or unparseable file contents.
class format_error : public error {
  public:
    using error::error;
};

class io_error : public error {
  public:
    using error::error;
};

/// An argument violates a documented precondition.
class parameter_error : public error {
  public:
    using error::error;
};

/// Settings are individually valid but inconsistent with each other.
class configuration_error : public error {
  public:
    using error::error;
};

} // namespace slicecast
