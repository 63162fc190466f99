#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sdgpipe {

// Base class for everything raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Transport-level failure after all retries were spent.
class NetworkError : public Error {
 public:
  using Error::Error;
};

// A catalog page body that could not be decoded. Carries the page index
// when the caller knows it.
class MalformedPageError : public Error {
 public:
  explicit MalformedPageError(const std::string& what,
                              std::optional<std::size_t> page = std::nullopt)
      : Error(what), page_index(page) {}
  std::optional<std::size_t> page_index;
};

class IngestError : public Error {
 public:
  using Error::Error;
};

class MissingFieldError : public Error {
 public:
  using Error::Error;
};

// No usable goal number survived response sanitization.
class EmptyLabelError : public Error {
 public:
  using Error::Error;
};

class InvalidLabelError : public Error {
 public:
  using Error::Error;
};

class UnknownCourseError : public Error {
 public:
  using Error::Error;
};

// Fatal backend condition; the whole labeling run cannot proceed.
class BackendError : public Error {
 public:
  using Error::Error;
};

// Per-request backend failure; eligible for retry.
class BackendRequestError : public Error {
 public:
  using Error::Error;
};

class TooFewItemsError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptyVocabularyError : public Error {
 public:
  using Error::Error;
};

class DivergenceError : public Error {
 public:
  using Error::Error;
};

class ModelIoError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage failed; `stage` names it for diagnostics and exit codes.
class StageError : public Error {
 public:
  StageError(std::string stage_name, const std::string& what)
      : Error("stage '" + stage_name + "' failed: " + what),
        stage(std::move(stage_name)) {}
  std::string stage;
};

}  // namespace sdgpipe
