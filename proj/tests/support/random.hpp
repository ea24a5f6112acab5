#pragma once

#include <random>
#include <string>
#include <vector>

#include "godeaux/eigen_support.hpp"
#include "godeaux/mpoly.hpp"
#include "godeaux/number_field.hpp"

namespace godeaux::testing {

/// Deterministic generator shared by the property tests.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  Rational rational(long bound = 9) {
    return Rational(integer(-bound, bound), integer(1, bound));
  }

  NumberFieldElement element(long bound = 9) { return {rational(bound), rational(bound), rational(bound)}; }

  NumberFieldElement nonzero_element(long bound = 9) {
    for (;;) {
      auto x = element(bound);
      if (!x.is_zero()) return x;
    }
  }

  /// Sparse polynomial with up to `terms` terms of total degree <= max_degree.
  Polynomial<K> polynomial(const std::vector<std::string>& vars, int max_degree, int terms) {
    Polynomial<K> p(vars);
    for (int i = 0; i < terms; ++i) {
      Monomial m(vars.size());
      int budget = static_cast<int>(integer(0, max_degree));
      for (std::size_t v = 0; v < vars.size() && budget > 0; ++v) {
        const int e = static_cast<int>(integer(0, budget));
        m.set(v, e);
        budget -= e;
      }
      p.add_term(m, element(5));
    }
    return p;
  }

  LinearMap4 linear_map(long bound = 5) {
    LinearMap4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = element(bound);
    return m;
  }

  Point4 point(long bound = 5) {
    Point4 p;
    for (int i = 0; i < 4; ++i) p(i) = element(bound);
    return p;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace godeaux::testing
