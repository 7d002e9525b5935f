#pragma once

#include <stdexcept>
#include <string>

namespace snd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(0, what) {}

  int line() const { return line_; }

 private:
  int line_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IrrationalDistance : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  using Error::Error;
};

class FlavorMismatch : public Error {
 public:
  using Error::Error;
};

class ModelMessageMismatch : public Error {
 public:
  using Error::Error;
};

class PlacementInfeasible : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class NoWitness : public Error {
 public:
  using Error::Error;
};

}  // namespace snd
