// Exact n-point discrete Fourier transform for arbitrary n (radix-2 FFT
// with a Bluestein fallback) plus the normalized cross-correlation used by
// the IMU features.

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace tiger::dft {

// In-place radix-2 FFT; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

// Exact n-point DFT of a real series, X_k = sum_t x_t e^{-2*pi*i*k*t/n}.
std::vector<std::complex<double>> dft(std::span<const double> x);

// Peak of the biased normalized cross-correlation over all integer lags.
// Both series are mean-removed and scaled by their population standard
// deviations; identical series give 1. Returns 0 when either side has
// zero variance or the series are empty/mismatched.
double normalized_xcorr_peak(std::span<const double> a, std::span<const double> b);

}  // namespace tiger::dft
