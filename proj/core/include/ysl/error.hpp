#pragma once

#include <stdexcept>
#include <string>

namespace ysl {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Scalars built over different symmetrizer data were mixed.
class ContextError : public Error {
 public:
  explicit ContextError(const std::string& what) : Error(what) {}
};

// A superscript or word length exceeded the context cap.  Callers must
// raise the cap and retry; results are never silently truncated.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

class NotInvertibleError : public Error {
 public:
  explicit NotInvertibleError(const std::string& what) : Error(what) {}
};

// (lambda, mu) pair with lambda - mu not a non-negative integral
// combination of simple coroots.
class DominanceError : public Error {
 public:
  explicit DominanceError(const std::string& what) : Error(what) {}
};

// A loop-group element fell outside the locus an operation requires
// (Gauss pivot not a unit, wrong diagonal valuations, zero moment value).
class LocusError : public Error {
 public:
  explicit LocusError(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace ysl
