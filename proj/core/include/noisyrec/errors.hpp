// Copyright 2026 the noisyrec authors
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

namespace noisyrec {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPrior : public Error {
 public:
  using Error::Error;
};

class InvalidExperiment : public Error {
 public:
  using Error::Error;
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

class InvalidPiecewiseValue : public Error {
 public:
  using Error::Error;
};

class InvalidInvolution : public Error {
 public:
  using Error::Error;
};

class UnknownSignal : public Error {
 public:
  using Error::Error;
};

/// Both likelihood rows assign zero to the signal; the posterior is undefined.
class ZeroLikelihoodSignal : public Error {
 public:
  using Error::Error;
};

class NotBayesPlausible : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class DegenerateMeans : public Error {
 public:
  using Error::Error;
};

class UnpairedSignal : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class InvalidBins : public Error {
 public:
  using Error::Error;
};

class EmptyGrid : public Error {
 public:
  using Error::Error;
};

}  // namespace noisyrec
