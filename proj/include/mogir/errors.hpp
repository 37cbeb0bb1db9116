#pragma once

#include <stdexcept>
#include <string>

namespace mogir {

/// Library error carrying a stable machine-checkable name
/// (e.g. "SlopeOutOfRange", "NonConvergence") next to the prose message.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace mogir
