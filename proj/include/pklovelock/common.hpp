#ifndef PKLOVELOCK_COMMON_HPP
#define PKLOVELOCK_COMMON_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pklov {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 8;       // largest supported real dimension 2m̄
inline constexpr int kMaxHolo = 4;      // largest supported complex dimension m̄
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Thrown when a metric (or a metric along a variation path) loses invertibility.
struct DegenerateMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when frequency support would exceed the configured hard cap.
struct DegreeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Deterministic pairwise reduction. The result depends only on the order of
// the slots, never on how the work that filled them was scheduled.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 8) {
    T s = v[0];
    for (size_t i = 1; i < v.size(); ++i) s += v[i];
    return s;
  }
  const size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

// Splitmix-style generator; used instead of std::uniform_real_distribution so
// sampled scenarios are reproducible independent of the standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  // uniform in [lo,hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // uniform integer in [0, n)
  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

 private:
  uint64_t state_;
};

}  // namespace pklov

#endif  // PKLOVELOCK_COMMON_HPP
