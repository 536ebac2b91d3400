#pragma once

#include <stdexcept>
#include <string>

namespace tbc {

/// Raised for precondition violations and malformed inputs anywhere in the
/// library. The message is meant to be shown to a user as-is.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input file cannot be opened. Carries the offending path.
class FileError : public Error {
 public:
  FileError(const std::string& what, std::string path)
      : Error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace tbc
