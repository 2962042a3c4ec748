// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace segre {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed inputs: shape mismatches, empty factors, bad modes.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A randomized rank computation disagreed across independent samples.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// Inputs failed a generic-position precondition (e.g. fit nullspace
/// dimension off, degenerate projection centers).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed while assembling a construction.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A numerical solver ended in a state it cannot certify.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace segre
