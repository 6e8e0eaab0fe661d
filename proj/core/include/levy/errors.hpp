#pragma once

#include <stdexcept>
#include <string>

namespace levy {

/// Requested depth/power exceeds the configured resource limit.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Computed data violates an expected structural property (block form,
/// closure of the stable set, classification shape, ...).
class structure_error : public std::runtime_error {
public:
    explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iteration failed to converge or stabilize within its budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace levy
