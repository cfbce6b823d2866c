// Copyright 2026 The qid Authors
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

#ifndef QID_ERRORS_HPP
#define QID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qid {

/// Base class for all qid errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed numeric input (non-finite entries, wrong shape, bad parameter).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// A probability vector or density operator fails normalization checks.
class InvalidDistribution : public Error {
  public:
    using Error::Error;
};

/// The requested measurement outcome has vanishing probability.
class OutcomeImpossible : public Error {
  public:
    using Error::Error;
};

/// An observable specification violates its stochasticity constraints.
class InvalidSpec : public Error {
  public:
    using Error::Error;
};

/// A full-rank operator was required but the argument is rank deficient.
class RankDeficient : public Error {
  public:
    using Error::Error;
};

/// The measurement cannot be knowingly reversed on the given state set.
class NotReversible : public Error {
  public:
    using Error::Error;
};

/// A documented precondition of the operation does not hold.
class PreconditionViolated : public Error {
  public:
    using Error::Error;
};

/// The outcome set does not form a complete measurement.
class InvalidInstrument : public Error {
  public:
    using Error::Error;
};

} // namespace qid

#endif // QID_ERRORS_HPP
