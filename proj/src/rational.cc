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

#include "cfbounds/rational.h"

#include <cctype>
#include <string>

#include "cfbounds/errors.h"

namespace cfbounds {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt Pow10(long exponent) {
  BigInt result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

[[noreturn]] void Fail(std::string_view text) {
  throw ParseError("not an exact decimal or fraction: '" + std::string(text) +
                   "'");
}

// Leading zeros are stripped so the string is never read as octal.
BigInt ParseInteger(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(first)));
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) Fail(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Fail(text);
    BigInt d = ParseInteger(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(ParseInteger(num), d);
    return negative ? Rational(-r) : r;
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!AllDigits(exp_text) || exp_text.size() > 4) Fail(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) Fail(text);
  if (!int_part.empty() && !AllDigits(int_part)) Fail(text);
  if (!frac_part.empty() && !AllDigits(frac_part)) Fail(text);

  BigInt mantissa = ParseInteger(std::string(int_part) + std::string(frac_part));
  exponent -= static_cast<long>(frac_part.size());
  Rational r = exponent >= 0 ? Rational(mantissa * Pow10(exponent))
                             : Rational(mantissa, Pow10(-exponent));
  return negative ? Rational(-r) : r;
}

std::string ToFractionString(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string ToDecimalString(const Rational& value, int places) {
  if (places < 0) throw InvalidArgumentError("negative decimal places");
  const BigInt scale = Pow10(places);
  const Rational scaled = abs(value) * scale;
  BigInt whole = numerator(scaled) / denominator(scaled);
  const Rational remainder = scaled - Rational(whole);
  const Rational half(1, 2);
  if (remainder > half || (remainder == half && whole % 2 == 1)) whole += 1;

  std::string digits = whole.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out = digits;
  if (places > 0) out.insert(out.size() - places, ".");
  if (value < 0 && whole != 0) out.insert(0, "-");
  return out;
}

std::string ToExactString(const Rational& value) {
  BigInt den = denominator(value);
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return ToFractionString(value);
  return ToDecimalString(value, std::max(twos, fives));
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

Rational Sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace cfbounds
