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

#include "hetnet/errors.hpp"

namespace hetnet {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateBidder: return "DuplicateBidder";
    case Errc::CqiLengthMismatch: return "CqiLengthMismatch";
    case Errc::DeltaTooSmall: return "DeltaTooSmall";
    case Errc::CqiOutOfRange: return "CqiOutOfRange";
    case Errc::InvalidDemand: return "InvalidDemand";
    case Errc::NegativeValue: return "NegativeValue";
    case Errc::BadConfig: return "BadConfig";
    case Errc::RTooLarge: return "RTooLarge";
    case Errc::NotAWinner: return "NotAWinner";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

namespace {
std::string format_message(Errc code, const std::string& message, int line) {
  std::string out = errc_name(code);
  if (line >= 0) out += " at line " + std::to_string(line);
  out += ": ";
  out += message;
  return out;
}
}  // namespace

Error::Error(Errc code, const std::string& message, int line)
    : std::runtime_error(format_message(code, message, line)), code_(code), line_(line) {}

}  // namespace hetnet
