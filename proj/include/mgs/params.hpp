#pragma once

#include <stdexcept>
#include <string>

namespace mgs {

// Model constants. n_squared is the inverse Elsasser number N^2; eps_nu and
// eps_kappa multiply the Laplacian in the constitutive law and the scalar
// equation; damping_c is the damping constant of the non-diffusive variant;
// amplitude_A and forcing_m define the steady state A sin(m x3).
struct PhysicalParams {
    double n_squared = 1.0;
    double eps_nu = 0.0;
    double eps_kappa = 0.0;
    double damping_c = 0.0;
    double amplitude_A = 0.0;
    int forcing_m = 1;

    void validate() const {
        if (!(n_squared > 0.0))
            throw std::invalid_argument("PhysicalParams: n_squared must be > 0");
        if (eps_nu < 0.0) throw std::invalid_argument("PhysicalParams: eps_nu must be >= 0");
        if (eps_kappa < 0.0) throw std::invalid_argument("PhysicalParams: eps_kappa must be >= 0");
        if (damping_c < 0.0) throw std::invalid_argument("PhysicalParams: damping_c must be >= 0");
        if (forcing_m < 1) throw std::invalid_argument("PhysicalParams: forcing_m must be >= 1");
    }
};

} // namespace mgs
