// Copyright 2026 The cmpk Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cmpk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs outside the admissible domain of a model-space kernel.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configuration collapsed (zero-length side, point on segment, ...).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class FootOnBoundary : public Error {
 public:
  FootOnBoundary(double t, double length)
      : Error("foot of perpendicular at t=" + std::to_string(t) +
              " is within the boundary margin of a segment of length " +
              std::to_string(length)),
        t_(t) {}
  double t() const { return t_; }

 private:
  double t_;
};

class RightAngleUnavailable : public Error {
 public:
  using Error::Error;
};

// Angle ladder was non-monotone beyond tolerance or collapsed.
class LadderFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class MeshError : public Error {
 public:
  using Error::Error;
};

// Bad space descriptor or constructor argument.
class SpaceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EstimationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cmpk
