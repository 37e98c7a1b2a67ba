#pragma once

#include <stdexcept>
#include <string>

namespace hk {

// Base for every domain error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A product involving a y-windowed series cannot guarantee the requested window.
class WindowUnderflow : public Error {
public:
  using Error::Error;
};

class NotInvertible : public Error {
public:
  using Error::Error;
};

// Coefficient requested at a q-order the series does not know exactly.
class PrecisionExceeded : public Error {
public:
  using Error::Error;
};

// Coefficient requested outside the y-window of a windowed series.
class WindowExceeded : public Error {
public:
  using Error::Error;
};

// (norm, residue) pair for which no integral q-exponent exists.
class InadmissiblePair : public Error {
public:
  using Error::Error;
};

class ZeroNormUnsupported : public Error {
public:
  using Error::Error;
};

class DegreeMismatch : public Error {
public:
  using Error::Error;
};

// A computed closed form disagrees with its expected reference expansion.
class ReferenceMismatch : public Error {
public:
  using Error::Error;
};

} // namespace hk
