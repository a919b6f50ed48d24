#include "kvn/phase_space/observables.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace kvn::phase_space {

double expectation_classical(const KvnState& s, const algebra::ClassicalPolynomial& f) {
  require_representation(s, Representation::kQP, "expectation_classical");
  double sum = 0.0;
  for (int j = 0; j < s.grid.np(); ++j) {
    const double p = s.grid.p(j);
    for (int i = 0; i < s.grid.nq(); ++i) sum += f.evaluate(s.grid.q(i), p) * std::norm(s.amp(i, j));
  }
  return sum * s.cell_area();
}

KvnState phase_scramble(const KvnState& s, std::uint64_t seed) {
  require_representation(s, Representation::kQP, "phase_scramble");
  std::mt19937_64 rng(seed);
  KvnState out = s;
  for (Eigen::Index k = 0; k < out.amp.size(); ++k) {
    // 53 random bits -> [0, 1); spelled out so the stream is platform independent.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    out.amp.data()[k] *= std::polar(1.0, 2 * std::numbers::pi * u);
  }
  return out;
}

}  // namespace kvn::phase_space
