#include "dyadic/simulator.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dyadic {

Stream::Stream(std::uint64_t seed, std::uint32_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream_id};
  engine_.seed(seq);
}

double Stream::uniform_open() {
  // (k + 0.5) / 2^53 for k in [0, 2^53): never 0, never 1.
  const std::uint64_t k = engine_() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double draw(const ComponentDist& dist, Stream& stream) {
  if (dist.degenerate()) return 0.0;
  const double a = dist.scale();
  switch (dist.kind()) {
    case DistKind::normal: {
      const double u1 = stream.uniform_open();
      const double u2 = stream.uniform_open();
      return a * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    case DistKind::laplace: {
      const double u = stream.uniform_open() - 0.5;
      const double mag = -a * std::log(1.0 - 2.0 * std::abs(u));
      return u < 0.0 ? -mag : mag;
    }
    case DistKind::uniform_symmetric:
      return a * (2.0 * stream.uniform_open() - 1.0);
    case DistKind::two_point_symmetric:
      return stream.uniform_open() < 0.5 ? -a : a;
    case DistKind::shifted_exponential:
      return -a * std::log(stream.uniform_open()) - a;
  }
  return 0.0;
}

SampleSet sample_components(const ModelConfig& config, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");

  auto stream = [seed](Latent which) { return Stream(seed, static_cast<std::uint32_t>(which)); };
  std::array<Stream, 7> streams{stream(Latent::alpha_i), stream(Latent::alpha_k),
                                stream(Latent::eta_j),   stream(Latent::eta_l),
                                stream(Latent::eps_ij),  stream(Latent::eps_kj),
                                stream(Latent::eps_il)};
  auto next = [&](Latent which, const ComponentDist& dist) {
    return draw(dist, streams[static_cast<std::size_t>(which)]);
  };

  std::vector<TripleSample> triples;
  triples.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double alpha_i = next(Latent::alpha_i, config.alpha);
    const double alpha_k = next(Latent::alpha_k, config.alpha);
    const double eta_j = next(Latent::eta_j, config.eta);
    const double eta_l = next(Latent::eta_l, config.eta);
    const double eps_ij = next(Latent::eps_ij, config.eps);
    const double eps_kj = next(Latent::eps_kj, config.eps);
    const double eps_il = next(Latent::eps_il, config.eps);
    triples.push_back({config.c + alpha_i + eta_j + eps_ij,
                       config.c + alpha_k + eta_j + eps_kj,
                       config.c + alpha_i + eta_l + eps_il});
  }
  return SampleSet(std::move(triples), seed, config);
}

}  // namespace dyadic
