#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "orlicz/condition_report.hpp"

namespace orlicz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A gauge cannot be inverted because it is flat on some interval.
class NonInvertibleError : public Error {
 public:
  NonInvertibleError() : Error("non-invertible gauge") {}
  explicit NonInvertibleError(const std::string& what) : Error("non-invertible gauge: " + what) {}
};

/// A theorem hypothesis on the gauges or weights does not hold.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what, std::optional<ConditionReport> report = std::nullopt)
      : Error(what), report_(std::move(report)) {}

  const std::optional<ConditionReport>& report() const noexcept { return report_; }

 private:
  std::optional<ConditionReport> report_;
};

/// The requested quantity depends on weights beyond the truncation dimension.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle was asked to run beyond its enumeration scale.
class ScaleError : public Error {
 public:
  explicit ScaleError(const std::string& what) : Error("oracle scale: " + what) {}
};

/// Malformed textual input (gauge spec, weight spec, CSV file).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace orlicz
