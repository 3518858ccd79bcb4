#pragma once

#include <stdexcept>
#include <string>

namespace rigidbound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text/JSON or an invalid edge set.
class GraphFormatError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

/// A requested fixed base is not an ordered d-clique of the host graph.
class InvalidBaseError : public Error {
 public:
  using Error::Error;
};

/// The graph has no K_d to pin (e.g. a triangle-free graph in dimension 3).
class NoFixedBaseError : public Error {
 public:
  using Error::Error;
};

/// The m-Bezout matrix is not square, i.e. the Maxwell count fails.
class NonSquareMatrixError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class NonPlanarError : public Error {
 public:
  using Error::Error;
};

}  // namespace rigidbound
