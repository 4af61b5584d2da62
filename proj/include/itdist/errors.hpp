#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace itdist {

// Base of everything the library throws on bad input. Check failures are not
// errors; they are reported through CheckReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class BoundTooLarge : public Error {
 public:
  using Error::Error;
};

class IndexOrder : public Error {
 public:
  using Error::Error;
};

class SplitOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotAnAlgebra : public Error {
 public:
  using Error::Error;
};

class UnsupportedNode : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ComposabilityError : public Error {
 public:
  using Error::Error;
};

class RaggedGrid : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class GlobularityError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& found);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace itdist
