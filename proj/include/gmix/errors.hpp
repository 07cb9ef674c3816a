#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmix {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter struct violates its invariants (non-positive variance, ...).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

// moments_to_gamma was asked to invert a non-positive mean.
class NonPositiveMean : public Error {
 public:
  using Error::Error;
};

// A model document failed validation; path() names the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An observation has zero likelihood under every component of the model.
class ZeroDensityObservation : public Error {
 public:
  ZeroDensityObservation(std::ptrdiff_t index, const std::string& detail)
      : Error("observation " + std::to_string(index) +
              " has zero density under every component" + detail),
        index_(index) {}
  std::ptrdiff_t index() const { return index_; }

 private:
  std::ptrdiff_t index_;
};

// A component lost essentially all responsibility mass, or its weighted
// variance degenerated; the fit cannot continue with this configuration.
class ComponentCollapse : public Error {
 public:
  ComponentCollapse(int component, const std::string& detail)
      : Error("component " + std::to_string(component) + " collapsed" + detail),
        component_(component) {}
  int component() const { return component_; }

 private:
  int component_;
};

// The requested configuration cannot be initialized on the given data.
class InfeasibleConfiguration : public Error {
 public:
  using Error::Error;
};

// Every configuration of a sweep failed, so there is nothing to rank.
class EmptySweep : public Error {
 public:
  using Error::Error;
};

// A delimited-text cell could not be parsed; line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(long line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

class MissingColumn : public Error {
 public:
  using Error::Error;
};

// Input series too short for the requested transform.
class TooShort : public Error {
 public:
  using Error::Error;
};

}  // namespace gmix
