#pragma once

#include <stdexcept>
#include <string>

namespace hg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adjacent samples are too far apart to be lifted unambiguously.
class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

/// Two grid functions were combined on different grids.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// A piecewise-linear-phase map reached a spectral routine without its
/// analytic derivative.
class MissingDerivative : public Error {
 public:
  using Error::Error;
};

/// A Sobolev index or construction parameter is outside its admissible range.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotLocallyConstant : public Error {
 public:
  using Error::Error;
};

/// Requested bumps cannot be placed with disjoint supports.
class Overcrowded : public Error {
 public:
  using Error::Error;
};

class InvalidProfile : public Error {
 public:
  using Error::Error;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

}  // namespace hg
