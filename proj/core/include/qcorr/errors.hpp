// Copyright 2026 The qcorr authors
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

#include <stdexcept>
#include <string>

namespace qcorr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
  using Error::Error;
};
struct NumericalFailure : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct InvalidState : Error {
  using Error::Error;
};
struct InvalidInstrument : Error {
  using Error::Error;
};
struct UnknownOutcome : Error {
  using Error::Error;
};
struct UnknownRepresentation : Error {
  using Error::Error;
};
struct ValueNotInSupport : Error {
  using Error::Error;
};
struct ValueNotInSpectrum : Error {
  using Error::Error;
};
struct NotPureState : Error {
  using Error::Error;
};
struct TrivialObservable : Error {
  using Error::Error;
};
struct NonDichotomic : Error {
  using Error::Error;
};
struct UndefinedConditional : Error {
  using Error::Error;
};
struct InvalidBloch : Error {
  using Error::Error;
};
struct InvalidArgument : Error {
  using Error::Error;
};

}  // namespace qcorr
