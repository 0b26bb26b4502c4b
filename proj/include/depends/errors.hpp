#pragma once

#include <stdexcept>
#include <string>

namespace depends {

class DependsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateEntity : public DependsError {
 public:
  using DependsError::DependsError;
};

/// Raised when a relation kind is recorded for a source language that the
/// taxonomy forbids (Delegate/Extension from Java).
class TaxonomyViolation : public DependsError {
 public:
  using DependsError::DependsError;
};

class RegistryConflict : public DependsError {
 public:
  using DependsError::DependsError;
};

class UnknownLanguage : public DependsError {
 public:
  using DependsError::DependsError;
};

class IoError : public DependsError {
 public:
  using DependsError::DependsError;
};

/// Fatal syntax error (unbalanced delimiters, unterminated literal).
class ParseError : public DependsError {
 public:
  ParseError(std::string path, int line, int column, const std::string& message)
      : DependsError(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                     message),
        path_(std::move(path)),
        line_(line),
        column_(column) {}

  const std::string& path() const { return path_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string path_;
  int line_;
  int column_;
};

}  // namespace depends
