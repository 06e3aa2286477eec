#pragma once

#include <stdexcept>
#include <string>

namespace giantmol {

// Scattering denominator vanished: bound-state pole, not a scattering state.
class PoleError : public std::runtime_error {
public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

class NotInEitLimit : public std::runtime_error {
public:
  explicit NotInEitLimit(const std::string& what) : std::runtime_error(what) {}
};

// Direct linear solve of the real-space amplitude equations failed.
class SingularSystem : public std::runtime_error {
public:
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

class FeatureNotResolved : public std::runtime_error {
public:
  explicit FeatureNotResolved(const std::string& what) : std::runtime_error(what) {}
};

class GapUnresolved : public std::runtime_error {
public:
  explicit GapUnresolved(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace giantmol
