#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

// Input outside the mathematical domain of an operation (n < 2k, odd d where
// even is required, malformed certificates, ...).
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A search or enumeration refused to run because its resource guard would be
// exceeded.
class guard_error : public std::runtime_error {
public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kneser
