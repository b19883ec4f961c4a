#pragma once

#include <stdexcept>
#include <string>

namespace artibot {

// Bad run configuration or malformed config file. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A referenced artifact (database, checkpoint, world file) is missing or
// unreadable. CLI exit code 3.
class ArtifactError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Environment entered a state it cannot continue from. CLI exit code 4.
class EnvironmentFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace artibot
