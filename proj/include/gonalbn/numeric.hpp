#pragma once

#include <cstdint>

namespace gonalbn {

/// Extension-space parameters: total degree d split into a quotient of
/// degree delta and a kernel of degree d - delta.
struct ExtensionSpec {
    std::int64_t g = 2;
    std::int64_t d = 0;
    std::int64_t delta = 0;
    bool kernel_iso_quotient = false;
};

/// Dimension of the extension space: 2*delta - d + g - 1 for distinct
/// kernel and quotient, g when they are isomorphic.  Throws
/// std::domain_error when the non-isomorphic formula would be negative.
std::int64_t ext_dim(const ExtensionSpec& spec);

/// Expected codimension of the corank->=t degeneracy locus:
/// max(0, t*(h0_quotient - h1_kernel + t)).  Requires t >= 1.
std::int64_t expected_codim(std::int64_t t, std::int64_t h0_quotient, std::int64_t h1_kernel);

/// Sections of the r-th power of the gonal pencil: r+1 while
/// g >= r*(nu-1), else the power goes non-special with r*nu - g + 1.
std::int64_t gonal_power_h0(std::int64_t g, std::int64_t nu, std::int64_t r);

/// Sections of a general line bundle of the given degree:
/// max(0, deg - g + 1).
std::int64_t general_h0(std::int64_t g, std::int64_t deg);

/// First cohomology of a general line bundle of the given degree
/// (via general_h0 and the index theorem).
std::int64_t general_h1(std::int64_t g, std::int64_t deg);

/// Expected dimension of the h-th secant variety of a non-degenerate
/// curve: min(2h-1, ambient_dim).  Requires h >= 1, ambient_dim >= 0.
std::int64_t secant_dim(std::int64_t h, std::int64_t ambient_dim);

/// Margin certifying that the generic extension of a projective family of
/// the given dimension clears the secant variety obstructing Segre
/// invariant sigma: locus_dim - 1 - secant_dim((2*delta-d+sigma-2)/2, m-1)
/// with m the extension-space dimension.  Positive margin certifies
/// s(F) >= sigma generically.
///
/// Requires 2*delta - d >= 2 (std::domain_error otherwise), sigma within
/// [4+d-2*delta, 2*delta-d] and sigma = 2*delta-d (mod 2)
/// (std::invalid_argument otherwise).
std::int64_t generic_stability_margin(std::int64_t g, std::int64_t d, std::int64_t delta,
                                      std::int64_t sigma, std::int64_t locus_dim);

}  // namespace gonalbn
