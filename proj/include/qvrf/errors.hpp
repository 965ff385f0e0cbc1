// Copyright 2026 The qvrf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qvrf {

// Base for every error this library raises deliberately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLength : public Error {
 public:
  InvalidLength(std::size_t expected, std::size_t actual)
      : Error("invalid length: expected " + std::to_string(expected) +
              " bytes, got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class HashToCurveFailure : public Error {
 public:
  HashToCurveFailure() : Error("hash_to_curve: counter exhausted 0..255") {}
};

class SourceUnavailable : public Error {
 public:
  using Error::Error;
};

class EntropyExhausted : public Error {
 public:
  EntropyExhausted(std::size_t requested, std::size_t remaining)
      : Error("entropy exhausted: requested " + std::to_string(requested) +
              " bytes, " + std::to_string(remaining) + " remaining"),
        requested_(requested),
        remaining_(remaining) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t remaining() const noexcept { return remaining_; }

 private:
  std::size_t requested_;
  std::size_t remaining_;
};

class ProtocolError : public Error {
 public:
  using Error::Error;
};

class InsufficientSample : public Error {
 public:
  explicit InsufficientSample(std::size_t size)
      : Error("sample too short for min-entropy estimate: " +
              std::to_string(size) + " bytes (need >= 256)") {}
};

class MalformedProof : public Error {
 public:
  using Error::Error;
};

class CorruptRun : public Error {
 public:
  using Error::Error;
};

class WriteFailed : public Error {
 public:
  using Error::Error;
};

class NoData : public Error {
 public:
  using Error::Error;
};

class IncomparableRuns : public Error {
 public:
  using Error::Error;
};

}  // namespace qvrf
