#pragma once

#include "mgs/field.hpp"
#include "mgs/params.hpp"

#include <string>

namespace mgs {

// Binary snapshot: magic "MGSP", u32 version, u32 grid dims, f64 time,
// PhysicalParams as 6 f64, then the complex coefficients as interleaved
// little-endian f64 pairs in storage order (row-major (i1,i2,i3), FFT-natural
// wavenumbers). Round-trips bit-exactly.
struct Checkpoint {
    double time = 0.0;
    PhysicalParams params;
    SpectralScalar theta;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp);
Checkpoint read_checkpoint(const std::string& path);

} // namespace mgs
