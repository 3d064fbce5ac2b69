#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "dyadic/model.hpp"

namespace dyadic {

/// The seven latent draws of one replicate. The numeric value is the stream id.
enum class Latent : std::uint32_t {
  alpha_i = 0,
  alpha_k = 1,
  eta_j = 2,
  eta_l = 3,
  eps_ij = 4,
  eps_kj = 5,
  eps_il = 6,
};

/// One substream of the simulator.
///
/// Each latent component owns an independent std::mt19937_64 seeded through
/// std::seed_seq{seed_lo, seed_hi, stream_id}. Both the engine and seed_seq
/// are fully specified by the standard, and the transforms below use only
/// the raw 64-bit output, so a (seed, stream) pair produces the same draws on
/// every conforming toolchain. Adding a stream never shifts another stream.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint32_t stream_id);

  /// Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform_open();

 private:
  std::mt19937_64 engine_;
};

/// One draw from the zero-mean law. Normal draws use the Box-Muller cosine
/// branch (two uniforms per draw), Laplace and exponential use inversion.
double draw(const ComponentDist& dist, Stream& stream);

/// n i.i.d. replicates of (y_ij, y_kj, y_il). Throws std::invalid_argument for n = 0.
SampleSet sample_components(const ModelConfig& config, std::size_t n, std::uint64_t seed);

}  // namespace dyadic
