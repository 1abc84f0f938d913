#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rf {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct chain_not_decreasing : std::runtime_error {
  explicit chain_not_decreasing(uint64_t index)
      : std::runtime_error("chain is not decreasing at index " + std::to_string(index)),
        index(index) {}
  uint64_t index;
};

struct not_cofinite : std::runtime_error {
  explicit not_cofinite(uint64_t index)
      : std::runtime_error("chain element " + std::to_string(index) + " is not infinite"),
        index(index) {}
  uint64_t index;
};

struct not_large : std::runtime_error {
  explicit not_large(uint64_t index)
      : std::runtime_error("largeness oracle rejected chain element " + std::to_string(index)),
        index(index) {}
  uint64_t index;
};

struct exhausted : std::runtime_error {
  explicit exhausted(uint64_t index)
      : std::runtime_error("chain element " + std::to_string(index) + " ran out of elements"),
        index(index) {}
  uint64_t index;
};

struct not_eventually_increasing : std::runtime_error {
  not_eventually_increasing()
      : std::runtime_error("germ has a residue class with zero drift") {}
};

/// Raised by operations a stream-backed germ cannot answer; such germs
/// support value enumeration and membership queries only.
struct unsupported_capability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct empty_cube : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct validation_failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct mode_unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct promise_violated : std::runtime_error {
  promise_violated(std::string what, std::vector<uint64_t> node)
      : std::runtime_error(std::move(what)), node(std::move(node)) {}
  std::vector<uint64_t> node;
};

}  // namespace rf
