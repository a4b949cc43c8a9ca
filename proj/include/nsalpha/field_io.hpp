#pragma once

#include "nsalpha/field.hpp"

#include <string>

namespace nsalpha {

// AFLD: self-describing little-endian binary field record.
//   magic "AFLD" | u32 version | u32 dim | u32 n_components |
//   u32 shape[dim] | f64 box_length | u32 flags | f64 data
// Data is one component after another, each row-major over the grid.
// Flags: bit 0 mean_zero, bit 1 divergence_free.

inline constexpr std::uint32_t kAfldVersion = 1;

void write_afld(const SpectralField& f, const std::string& path);
SpectralField read_afld(const std::string& path);

/// One row per grid point: coordinates then component values.
void write_csv(const SpectralField& f, const std::string& path);

}  // namespace nsalpha
