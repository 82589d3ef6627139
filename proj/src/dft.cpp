#include "tiger/dft.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace tiger::dft {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = a[i + j];
                std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

std::vector<std::complex<double>> dft(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    if (n == 0) return out;
    if (n == 1) {
        out[0] = x[0];
        return out;
    }

    if (is_pow2(n)) {
        std::vector<std::complex<double>> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = x[i];
        fft_pow2(a, false);
        return a;
    }

    // Bluestein: X_k = w_k * sum_t (x_t w_t) conj-chirp convolution, with
    // w_m = e^{-i*pi*m^2/n}. The m^2 exponent is reduced mod 2n in integer
    // arithmetic to keep the chirp angles exact for large m.
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> chirp(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t q = (static_cast<std::uint64_t>(i) * i) % (2 * n);
        const double ang = -kPi * static_cast<double>(q) / static_cast<double>(n);
        chirp[i] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<std::complex<double>> a(m), b(m);
    for (std::size_t i = 0; i < n; ++i) a[i] = x[i] * chirp[i];
    b[0] = {1.0, 0.0};
    for (std::size_t i = 1; i < n; ++i) {
        b[i] = std::conj(chirp[i]);
        b[m - i] = b[i];
    }
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, true);

    std::vector<std::complex<double>> out2(n);
    for (std::size_t k = 0; k < n; ++k) out2[k] = a[k] * chirp[k];
    return out2;
}

double normalized_xcorr_peak(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) return 0.0;

    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    if (va <= 0.0 || vb <= 0.0) return 0.0;
    const double scale = std::sqrt(va / n) * std::sqrt(vb / n) * static_cast<double>(n);

    // Linear cross-correlation via zero-padded FFTs.
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> fa(m), fb(m);
    for (std::size_t i = 0; i < n; ++i) {
        fa[i] = a[i] - ma;
        fb[i] = b[i] - mb;
    }
    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= std::conj(fb[i]);
    fft_pow2(fa, true);

    // Entry 0 is lag 0, entries m-1..m-(n-1) are negative lags.
    double peak = fa[0].real();
    for (std::size_t lag = 1; lag < n; ++lag) {
        peak = std::max(peak, fa[lag].real());
        peak = std::max(peak, fa[m - lag].real());
    }
    return peak / scale;
}

}  // namespace tiger::dft
