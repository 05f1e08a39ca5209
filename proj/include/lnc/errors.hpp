#pragma once

#include <stdexcept>

namespace lnc {

/// Invalid simulation, CLI or input-file configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lnc
