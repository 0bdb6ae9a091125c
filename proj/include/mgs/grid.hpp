#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgs {

// Uniform periodic grid on [0,2pi]^3. n1,n2,n3 are the number of modes
// (= samples) per axis; wavenumbers per axis run over [-n/2, n/2).
struct Grid {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;

    Grid() = default;
    Grid(int n1_, int n2_, int n3_) : n1(n1_), n2(n2_), n3(n3_) { validate(); }

    void validate() const {
        for (int n : {n1, n2, n3}) {
            if (n < 8 || n % 2 != 0)
                throw std::invalid_argument("Grid: modes per axis must be even and >= 8, got " +
                                            std::to_string(n));
        }
    }

    std::size_t size() const { return std::size_t(n1) * n2 * n3; }
    std::array<int, 3> dims() const { return {n1, n2, n3}; }

    // Storage is row-major over (i1,i2,i3) with FFT-natural wavenumber order:
    // index i maps to wavenumber i for i < n/2 and i - n otherwise.
    std::size_t index(int i1, int i2, int i3) const {
        return (std::size_t(i1) * n2 + i2) * n3 + i3;
    }

    static int wavenumber(int idx, int n) { return idx < n / 2 ? idx : idx - n; }
    static int wave_index(int k, int n) { return k >= 0 ? k : k + n; }

    std::array<int, 3> wavevector(std::size_t flat) const {
        int i3 = int(flat % n3);
        int i2 = int((flat / n3) % n2);
        int i1 = int(flat / (std::size_t(n3) * n2));
        return {wavenumber(i1, n1), wavenumber(i2, n2), wavenumber(i3, n3)};
    }

    bool in_range(int k1, int k2, int k3) const {
        return k1 >= -n1 / 2 && k1 < n1 / 2 && k2 >= -n2 / 2 && k2 < n2 / 2 && k3 >= -n3 / 2 &&
               k3 < n3 / 2;
    }

    std::size_t index_of_wave(int k1, int k2, int k3) const {
        return index(wave_index(k1, n1), wave_index(k2, n2), wave_index(k3, n3));
    }

    // Grid coordinate of sample i along an axis with n points.
    static double coord(int i, int n) { return 2.0 * pi() * i / n; }

    static constexpr double pi() { return 3.14159265358979323846; }

    bool operator==(const Grid& o) const { return n1 == o.n1 && n2 == o.n2 && n3 == o.n3; }
};

} // namespace mgs
