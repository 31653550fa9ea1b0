#ifndef PLCOV_BASE_HPP
#define PLCOV_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plcov {

// Exact arithmetic everywhere; no floating point in any computation path.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using VertexId = int;

/// Malformed or inconsistent input (bad facet lists, non-subcomplexes,
/// violated preconditions).  CLI maps this to exit code 1.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// An explicit enumeration budget was exhausted.  CLI maps this to exit
/// code 3.  The message names the bound that was hit.
class ResourceExhausted : public std::runtime_error {
 public:
  explicit ResourceExhausted(const std::string& what)
      : std::runtime_error(what) {}
};

/// splitmix64: the deterministic stream behind all seeded perturbations.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

/// Derived seed for transversality resampling; must be stable across
/// platforms so reports stay byte-identical.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 rng(seed ^ (0x6a09e667f3bcc909ULL + salt));
  return rng.next();
}

/// FNV-1a over raw bytes; used for the input digests embedded in reports.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t v);

}  // namespace plcov

#endif  // PLCOV_BASE_HPP
