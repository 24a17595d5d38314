/*
 * Copyright 2026 The alphaeff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace alphaeff {

/// Base of every error raised by the library. All of them describe bad data
/// or bad parameters; none indicate an internal fault.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside the domain of a formula (nonpositive denominator,
/// zero speedup, log of a nonpositive number).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The merit is undefined for a single processor (division by k - 1).
class UndefinedMeritError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Least-squares fit with no spread in the regressor.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Unrecognized header, missing columns or a payload that is not CSV.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Parsing succeeded but no data row survived validation.
class EmptyDataError : public Error {
 public:
  using Error::Error;
};

/// Network failure with no cached copy to fall back on.
class RetrievalError : public Error {
 public:
  using Error::Error;
};

}  // namespace alphaeff
