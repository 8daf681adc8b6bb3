#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seccost {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 2 (data error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidFrame : public Error {
 public:
  InvalidFrame(std::size_t len, std::size_t minimum)
      : Error("frame of " + std::to_string(len) + " B is shorter than the minimum of " +
              std::to_string(minimum) + " B"),
        minimum_(minimum) {}
  std::size_t minimum() const noexcept { return minimum_; }

 private:
  std::size_t minimum_;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class UnstableQueue : public Error {
 public:
  using Error::Error;
};

class ProfileError : public Error {
 public:
  using Error::Error;
};

class UnknownCipher : public Error {
 public:
  using Error::Error;
};

class MtuTooSmall : public Error {
 public:
  using Error::Error;
};

class InconsistentColoring : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class TruncatedCapture : public Error {
 public:
  TruncatedCapture(std::size_t record_index, const std::string& what)
      : Error("truncated capture at record " + std::to_string(record_index) + ": " + what),
        record_index_(record_index) {}
  std::size_t record_index() const noexcept { return record_index_; }

 private:
  std::size_t record_index_;
};

class EmptySelection : public Error {
 public:
  using Error::Error;
};

}  // namespace seccost
