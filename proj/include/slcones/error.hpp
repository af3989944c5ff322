// Copyright 2026 The slcones Authors
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

#include <stdexcept>
#include <string>

namespace slcones {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Roots of the profile cubic collide (Clifford torus or constant profile).
class DegenerateFamilyError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class NotDoublyPeriodicError : public Error {
 public:
  using Error::Error;
};

// Lattice enumeration would visit more points than the configured budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class IncompleteSpectrumError : public Error {
 public:
  using Error::Error;
};

// Flood-fill region counts disagree between two grid resolutions.
class UnstableCountError : public Error {
 public:
  using Error::Error;
};

}  // namespace slcones
