#pragma once

#include <stdexcept>
#include <string>

namespace pochette {

// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// slope
class NotCoprime : public Error {
 public:
  using Error::Error;
};
class ZeroSlopePair : public Error {
 public:
  using Error::Error;
};
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};
class ZeroNumerator : public Error {
 public:
  using Error::Error;
};

// diagram
class DanglingReference : public Error {
 public:
  using Error::Error;
};
class AsymmetricLinking : public Error {
 public:
  using Error::Error;
};
class MultipleTopHandles : public Error {
 public:
  using Error::Error;
};
class NotClosed : public Error {
 public:
  using Error::Error;
};
class InconsistentDiagram : public Error {
 public:
  using Error::Error;
};
class PatternPreconditionFailed : public Error {
 public:
  using Error::Error;
};
class MissingMeridians : public Error {
 public:
  using Error::Error;
};

// surgery
class HypothesesNotMet : public Error {
 public:
  using Error::Error;
};

// file formats
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pochette
