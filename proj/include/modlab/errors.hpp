#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modlab {

// Invalid input: bad field, malformed pattern/ideal, broken module axioms,
// parse errors. Maps to CLI exit code 2.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed a configured cap. Carries which cap and the
// size that was requested. Maps to CLI exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& cap_name, uint64_t requested, uint64_t cap)
      : std::runtime_error("cap '" + cap_name + "' exceeded: need " +
                           std::to_string(requested) + ", cap is " +
                           std::to_string(cap)),
        cap_name_(cap_name),
        requested_(requested),
        cap_(cap) {}

  const std::string& cap_name() const { return cap_name_; }
  uint64_t requested() const { return requested_; }
  uint64_t cap() const { return cap_; }

 private:
  std::string cap_name_;
  uint64_t requested_;
  uint64_t cap_;
};

}  // namespace modlab
