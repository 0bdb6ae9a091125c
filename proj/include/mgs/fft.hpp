#pragma once

#include "mgs/field.hpp"

namespace mgs {

// Discrete transform pair on the periodic box. to_spectral normalizes by
// 1/(n1*n2*n3) and enforces Hermitian symmetry; to_physical discards the
// imaginary roundoff residue (callers can query it via imag_residue).
SpectralScalar to_spectral(const PhysicalScalar& f, bool force_mean_free = false);
PhysicalScalar to_physical(const SpectralScalar& g);

// Raw complex transforms used by the solver kernels (no normalization on the
// backward direction; forward carries 1/N).
void fft_forward(const Grid& grid, const cvec& in, cvec& out);
void fft_backward(const Grid& grid, const cvec& in, cvec& out);

// Max |Im| of the backward transform of g; diagnostic for Hermitian symmetry.
double imag_residue(const SpectralScalar& g);

// 2/3-rule dealiasing: zero every coefficient with |k_i| > n_i/3.
SpectralScalar dealias(const SpectralScalar& g);
void dealias_inplace(SpectralScalar& g);
bool is_dealiased(const SpectralScalar& g);

// Smooth radial spectral cutoff at scale n: multiply by phi(|k|/n) where phi
// is a C^inf profile with phi = 1 on [0,1/2] and phi = 0 on [1,inf).
SpectralScalar mollify(const SpectralScalar& f, int n);
double mollifier_profile(double r);

} // namespace mgs
