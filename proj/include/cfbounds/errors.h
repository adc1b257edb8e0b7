// Copyright 2026 The cfbounds Authors.
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

// Error types. Each carries a category so the command-line front end can map
// failures onto its exit-code contract.

#ifndef CFBOUNDS_ERRORS_H_
#define CFBOUNDS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cfbounds {

enum class ErrorKind {
  kInvalidArgument,  // malformed model, query or table
  kParse,            // unreadable text or JSON
  kCapExceeded,      // enumeration larger than the configured cap
  kConditioning,     // conditioning on a zero-probability event
  kInfeasible,       // observed distribution admits no response distribution
  kScope,            // nonlinear objective or unsupported cluster shape
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorKind::kInvalidArgument, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ErrorKind::kParse, what) {}
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& what)
      : Error(ErrorKind::kCapExceeded, what) {}
};

class ConditioningError : public Error {
 public:
  explicit ConditioningError(const std::string& what)
      : Error(ErrorKind::kConditioning, what) {}
};

class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::string certificate)
      : Error(ErrorKind::kInfeasible, what),
        certificate_(std::move(certificate)) {}
  // Human-readable Farkas certificate, possibly empty.
  const std::string& certificate() const { return certificate_; }

 private:
  std::string certificate_;
};

class ScopeError : public Error {
 public:
  explicit ScopeError(const std::string& what)
      : Error(ErrorKind::kScope, what) {}
};

}  // namespace cfbounds

#endif  // CFBOUNDS_ERRORS_H_
