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

#include <stdexcept>
#include <string>

namespace hetnet {

enum class Errc {
  DuplicateBidder,
  CqiLengthMismatch,
  DeltaTooSmall,
  CqiOutOfRange,
  InvalidDemand,
  NegativeValue,
  BadConfig,
  RTooLarge,
  NotAWinner,
  TooLarge,
  ParseError,
  BadArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int line = -1);

  Errc code() const { return code_; }
  /// 1-based input line for parse errors, -1 otherwise.
  int line() const { return line_; }

 private:
  Errc code_;
  int line_;
};

}  // namespace hetnet
