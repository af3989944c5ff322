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

#include <cstdint>
#include <string>
#include <string_view>

namespace slcones {

// Reduced fraction with positive denominator.
class Fraction {
 public:
  Fraction(std::int64_t num, std::int64_t den);
  explicit Fraction(std::int64_t value) : Fraction(value, 1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// Accepts "p/q" or an integer.
Fraction parse_fraction(std::string_view text);

}  // namespace slcones
