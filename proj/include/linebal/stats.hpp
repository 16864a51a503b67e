#pragma once

#include <cstdint>
#include <random>

namespace linebal {

/// Seed for a reproducible random stream. Equal seeds and equal call
/// sequences produce identical samples on every platform.
struct RngSeed {
    std::uint64_t value = 0;

    bool operator==(const RngSeed&) const = default;
};

struct NormalParams {
    double mean = 0.0;  ///< minutes
    double sd = 0.0;    ///< minutes, >= 0

    bool operator==(const NormalParams&) const = default;
};

struct PoissonParams {
    double rate = 0.0;  ///< expected count, >= 0

    bool operator==(const PoissonParams&) const = default;
};

/// 64-bit mixing finalizer (one splitmix64 step). Distinct small inputs
/// map to well-separated outputs.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of substream `index` of `base`: base.value ^ mix64(index).
/// Substreams for distinct indices behave as independent streams.
RngSeed substream_seed(RngSeed base, std::uint64_t index) noexcept;

/// Deterministic random stream around std::mt19937_64, whose output
/// sequence is pinned by the standard, so draws are identical across
/// platforms and compilers. Cheap to construct; not thread-safe.
class RngStream {
public:
    explicit RngStream(RngSeed seed) : engine_(seed.value) {}

    /// Uniform draw strictly inside (0, 1) with 53-bit resolution.
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

/// Inverse standard normal CDF. Rational approximation refined by one
/// Newton step against the erfc-based CDF; |cdf(result) - p| <= 1e-9.
/// Throws std::domain_error unless 0 < p < 1.
double normal_quantile(double p);

/// Standard normal CDF, accurate to machine precision via erfc.
double normal_cdf(double z) noexcept;

/// P(X <= k) for X ~ Poisson(rate), accumulated with the recurrence
/// term_i = term_{i-1} * rate / i (no factorials). Result in [0, 1].
/// Throws std::domain_error for k < 0 or rate < 0. O(k) time.
double poisson_cdf(long long k, double rate);

/// Smallest k >= 0 with poisson_cdf(k, rate) >= p; p = 0 yields 0.
/// Throws std::domain_error unless 0 <= p < 1 and rate >= 0.
long long poisson_quantile(double p, double rate);

/// Draw from N(mean, sd^2) truncated below at 0 by clamping. sd = 0
/// returns mean exactly. Consumes exactly one uniform.
double sample_normal(const NormalParams& params, RngStream& rng);

/// Poisson draw by sequential CDF inversion; rate = 0 yields 0.
/// Consumes exactly one uniform. Throws std::domain_error if rate < 0.
long long sample_poisson(const PoissonParams& params, RngStream& rng);

}  // namespace linebal
