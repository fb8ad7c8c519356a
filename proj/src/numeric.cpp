#include "gonalbn/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace gonalbn {

std::int64_t ext_dim(const ExtensionSpec& spec) {
    if (spec.kernel_iso_quotient) return spec.g;
    const std::int64_t v = 2 * spec.delta - spec.d + spec.g - 1;
    if (v < 0) {
        throw std::domain_error("ext_dim: 2*delta - d + g - 1 < 0, outside the formula's regime");
    }
    return v;
}

std::int64_t expected_codim(std::int64_t t, std::int64_t h0_quotient, std::int64_t h1_kernel) {
    if (t < 1) throw std::invalid_argument("expected_codim: t must be >= 1");
    return std::max<std::int64_t>(0, t * (h0_quotient - h1_kernel + t));
}

std::int64_t gonal_power_h0(std::int64_t g, std::int64_t nu, std::int64_t r) {
    if (nu < 2) throw std::invalid_argument("gonal_power_h0: nu must be >= 2");
    if (r < 0) throw std::invalid_argument("gonal_power_h0: r must be >= 0");
    if (g >= r * (nu - 1)) return r + 1;
    return r * nu - g + 1;
}

std::int64_t general_h0(std::int64_t g, std::int64_t deg) {
    if (g < 0) throw std::invalid_argument("general_h0: g must be >= 0");
    return std::max<std::int64_t>(0, deg - g + 1);
}

std::int64_t general_h1(std::int64_t g, std::int64_t deg) {
    return general_h0(g, deg) - deg + g - 1;
}

std::int64_t secant_dim(std::int64_t h, std::int64_t ambient_dim) {
    if (h < 1) throw std::invalid_argument("secant_dim: h must be >= 1");
    if (ambient_dim < 0) throw std::invalid_argument("secant_dim: ambient_dim must be >= 0");
    return std::min(2 * h - 1, ambient_dim);
}

std::int64_t generic_stability_margin(std::int64_t g, std::int64_t d, std::int64_t delta,
                                      std::int64_t sigma, std::int64_t locus_dim) {
    const std::int64_t gap = 2 * delta - d;
    if (gap < 2) {
        throw std::domain_error(
            "generic_stability_margin: requires 2*delta - d >= 2");
    }
    if (sigma < 4 + d - 2 * delta || sigma > gap) {
        throw std::invalid_argument(
            "generic_stability_margin: sigma outside [4+d-2*delta, 2*delta-d]");
    }
    if (((sigma - gap) % 2 + 2) % 2 != 0) {
        throw std::invalid_argument(
            "generic_stability_margin: sigma must have the parity of 2*delta-d");
    }
    const std::int64_t m = ext_dim({g, d, delta, false});
    const std::int64_t h = (gap + sigma - 2) / 2;
    return locus_dim - 1 - secant_dim(h, m - 1);
}

}  // namespace gonalbn
