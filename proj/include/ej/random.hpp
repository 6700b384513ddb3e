#pragma once

#include "ej/field.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ej {

/// Seeded random source for reproducible randomized checks. All draws go
/// through next(), so streams are identical across platforms (no
/// distribution objects, which are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed), base_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [lo, hi], inclusive.
  long long int_in(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  /// Small rational with numerator in [-9, 9] and denominator in {1, 2, 3}.
  Rational small_rational() {
    return Rational(int_in(-9, 9), int_in(1, 3));
  }

  /// Field element with random rational part; when with_roots is set, the
  /// sqrt components are randomized too.
  FieldElem field_elem(bool with_roots) {
    if (!with_roots) return FieldElem(small_rational());
    return {small_rational(), small_rational(), small_rational(), small_rational()};
  }

  std::vector<FieldElem> vec(int dim, bool with_roots = false) {
    std::vector<FieldElem> v(dim);
    for (auto& x : v) x = field_elem(with_roots);
    return v;
  }

  /// Independent child stream; used to parallelize sample loops while
  /// keeping reports reproducible.
  Rng split(std::uint64_t stream) const {
    // splitmix64 of (base_seed, stream)
    std::uint64_t z = base_ ^ (stream + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t base_;
};

}  // namespace ej
