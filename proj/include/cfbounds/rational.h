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

// Exact rational numbers and their decimal text forms.

#ifndef CFBOUNDS_RATIONAL_H_
#define CFBOUNDS_RATIONAL_H_

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace cfbounds {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "0.32", "-1.5", "7", "1e-3", "2.5E2" or "1/14" into an exact
// rational. Throws ParseError on anything else.
Rational ParseRational(std::string_view text);

// Exact "p/q" (or "p" when the denominator is 1).
std::string ToFractionString(const Rational& value);

// Rounds to `places` decimals, ties to even. Never prints "-0.00".
std::string ToDecimalString(const Rational& value, int places);

// Terminating decimal expansion if one exists, otherwise the fraction form.
// Parses back to the same value with ParseRational.
std::string ToExactString(const Rational& value);

double ToDouble(const Rational& value);

Rational Sum(const std::vector<Rational>& values);

}  // namespace cfbounds

#endif  // CFBOUNDS_RATIONAL_H_
