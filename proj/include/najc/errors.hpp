#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace najc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// Input document does not follow the AnalysisInput schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

class DegenerateGram : public Error {
public:
  using Error::Error;
};

class DuplicateParams : public Error {
public:
  using Error::Error;
};

class RetriesExhausted : public Error {
public:
  using Error::Error;
};

/// The class vanishes at some point; `witness()` is the first such point index.
class NotRegular : public Error {
public:
  NotRegular(std::size_t witness, std::string label)
    : Error("extension class vanishes at point '" + label + "'"),
      witness_(witness),
      label_(std::move(label)) {}

  std::size_t witness() const { return witness_; }
  const std::string& label() const { return label_; }

private:
  std::size_t witness_;
  std::string label_;
};

class MissingUnit : public Error {
public:
  using Error::Error;
};

/// The bilinear form degenerates on the filtration step of index `level()` (1-based).
class NotPolarizing : public Error {
public:
  explicit NotPolarizing(std::size_t level)
    : Error("form is degenerate on filtration step " + std::to_string(level)), level_(level) {}

  std::size_t level() const { return level_; }

private:
  std::size_t level_;
};

class NotInH0 : public Error {
public:
  using Error::Error;
};

class LeakageError : public Error {
public:
  using Error::Error;
};

class RelationViolation : public Error {
public:
  RelationViolation(std::size_t first, std::size_t second, std::string relation)
    : Error("relation '" + relation + "' fails on multiplier pair (" + std::to_string(first) +
            ", " + std::to_string(second) + ")"),
      first_(first),
      second_(second),
      relation_(std::move(relation)) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }
  const std::string& relation() const { return relation_; }

private:
  std::size_t first_;
  std::size_t second_;
  std::string relation_;
};

class InputNotOnVariety : public Error {
public:
  using Error::Error;
};

class InvalidPath : public Error {
public:
  using Error::Error;
};

class UnknownLabel : public Error {
public:
  using Error::Error;
};

class WeightTooSmall : public Error {
public:
  using Error::Error;
};

class ZeroPoint : public Error {
public:
  using Error::Error;
};

class ZeroParameter : public Error {
public:
  using Error::Error;
};

}  // namespace najc
