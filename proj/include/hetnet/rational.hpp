#pragma once
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

#include <gmpxx.h>

#include <string>

namespace hetnet {

/// Exact rational number. All prices, valuations, welfare and payments are
/// kept exact so greedy ordering, tie-breaking and oracle equality tests are
/// deterministic.
using Rat = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);

/// Parses "7", "-3/4", "2.50", "1e-3", "12.5e2" into an exact rational.
/// Throws Error(Errc::ParseError) on malformed input.
Rat rat_from_string(const std::string& text);

/// Canonical text form: "p" or "p/q".
std::string rat_to_string(const Rat& value);

}  // namespace hetnet
