#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace colnum {

/// Thrown by long-running algorithms when their cooperative deadline expires.
class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("deadline exceeded") {}
};

/// Cooperative wall-clock deadline. Default-constructed deadlines never expire.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.armed_ = true;
    d.when_ = std::chrono::steady_clock::now() + budget;
    return d;
  }
  bool expired() const { return armed_ && std::chrono::steady_clock::now() >= when_; }
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  bool armed_ = false;
  std::chrono::steady_clock::time_point when_{};
};

/// mt19937_64 with explicit rejection sampling so results do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling; bound > 0
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }
  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[below_int(i + 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull + b;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace colnum
