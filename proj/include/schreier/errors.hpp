#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schreier {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroPolynomial : public Error {
 public:
  DivisionByZeroPolynomial() : Error("division by the zero polynomial") {}
};

class CapExceeded : public Error {
 public:
  CapExceeded(int n, int cap)
      : Error("enumeration size " + std::to_string(n) + " exceeds cap " +
              std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  int n() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

class IndexBelowTwo : public Error {
 public:
  explicit IndexBelowTwo(long long index)
      : Error("closed form needs target index >= 2, got " +
              std::to_string(index)) {}
};

// A count came out negative; only possible when two backends disagree.
class NegativeTermDetected : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NonContiguousIndex : public Error {
 public:
  NonContiguousIndex(std::size_t line, long long expected, long long got)
      : Error("line " + std::to_string(line) + ": expected index " +
              std::to_string(expected) + ", got " + std::to_string(got)),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidIdentifier : public Error {
 public:
  explicit InvalidIdentifier(const std::string& id)
      : Error("not an OEIS identifier: '" + id + "'") {}
};

class WindowOutOfRange : public Error {
 public:
  using Error::Error;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

class HttpStatusError : public Error {
 public:
  HttpStatusError(int status, const std::string& url)
      : Error("HTTP " + std::to_string(status) + " from " + url),
        status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

}  // namespace schreier
