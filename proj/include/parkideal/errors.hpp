#pragma once

#include <stdexcept>
#include <string>

namespace parkideal {

/** Malformed or out-of-range caller input. CLI exit code 2. */
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Structurally invalid request (non-artinian ideal, wrong graph shape, ...). CLI exit code 2. */
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/** A size guard tripped before a computation that would not finish at desk scale. CLI exit code 3. */
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace parkideal
