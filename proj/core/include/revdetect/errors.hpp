#pragma once

#include <stdexcept>
#include <string>

namespace revdetect {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- input / corpus ---------------------------------------------------------

class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string file, std::size_t line)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class UnknownConferenceYear : public Error {
 public:
  using Error::Error;
};

class InvalidDecision : public Error {
 public:
  using Error::Error;
};

class EmptyReview : public Error {
 public:
  using Error::Error;
};

// --- providers ---------------------------------------------------------------

class ProviderError : public Error {
 public:
  explicit ProviderError(const std::string& what, int attempts = 1)
      : Error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

class SafetyFiltered : public ProviderError {
 public:
  using ProviderError::ProviderError;
};

class ContextOverflow : public ProviderError {
 public:
  using ProviderError::ProviderError;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

// --- vector math -------------------------------------------------------------

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

// --- detection / calibration / evaluation ------------------------------------

class DetectorMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyEnsemble : public Error {
 public:
  using Error::Error;
};

class EmptyScores : public Error {
 public:
  using Error::Error;
};

class InconsistentReviewSets : public Error {
 public:
  using Error::Error;
};

class ZeroCrossEntropy : public Error {
 public:
  using Error::Error;
};

class AllZeroGrades : public Error {
 public:
  using Error::Error;
};

class AllZeroDiffs : public Error {
 public:
  using Error::Error;
};

// --- generation pipeline ------------------------------------------------------

class MalformedOutput : public Error {
 public:
  using Error::Error;
};

}  // namespace revdetect
