//------------------------------------------------------------------------------
//
//   Copyright 2026 the hetnet-auction authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "hetnet/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "hetnet/errors.hpp"

namespace hetnet {

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(Errc::BadArgument, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(const std::string& text) {
  throw Error(Errc::ParseError, "not a number: '" + text + "'");
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  std::string s = text;
  // trim
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) bad(text);
  s = s.substr(b, e - b + 1);

  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) bad(text);

  // p/q form
  if (size_t slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den.find_first_not_of('0') == std::string::npos)
      bad(text);
    Rat r{mpz_class(num, 10), mpz_class(den, 10)};
    r.canonicalize();
    return negative ? Rat(-r) : r;
  }

  // decimal with optional exponent
  long exponent = 0;
  if (size_t ep = s.find_first_of("eE"); ep != std::string::npos) {
    std::string exp_part = s.substr(ep + 1);
    s = s.substr(0, ep);
    if (exp_part.empty()) bad(text);
    bool exp_neg = false;
    if (exp_part[0] == '+' || exp_part[0] == '-') {
      exp_neg = exp_part[0] == '-';
      exp_part.erase(0, 1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad(text);
    exponent = std::strtol(exp_part.c_str(), nullptr, 10);
    if (exp_neg) exponent = -exponent;
  }

  std::string digits = s;
  size_t dot = digits.find('.');
  if (dot != std::string::npos) {
    exponent -= static_cast<long>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  if (!all_digits(digits)) bad(text);

  Rat r(mpz_class(digits, 10), 1);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0)
    r *= Rat(pow10);
  else
    r /= Rat(pow10);
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

}  // namespace hetnet
