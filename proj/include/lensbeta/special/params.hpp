#pragma once

#include "lensbeta/core/complex.hpp"

namespace lensbeta {

// Nome conventions: section3 uses p = e^{i pi sigma}, appendix_b uses p = e^{2 i pi sigma}.
enum class NomeConvention { section3, appendix_b };

struct EllipticParams {
    cplx sigma;
    cplx tau;
    int r = 1;
    NomeConvention convention = NomeConvention::section3;

    void validate() const
    {
        if (!is_finite(sigma) || !is_finite(tau)) fail(Errc::invalid_input, "non-finite modular parameter");
        if (!(sigma.imag() > 0.0) || !(tau.imag() > 0.0))
            fail(Errc::domain, "Im(sigma) and Im(tau) must be positive");
        if (r < 1) fail(Errc::invalid_input, "r must be >= 1");
    }

    double scale() const { return convention == NomeConvention::section3 ? pi : two_pi; }
    cplx log_p() const { return I * scale() * sigma; }
    cplx log_q() const { return I * scale() * tau; }
    cplx p() const { return std::exp(log_p()); }
    cplx q() const { return std::exp(log_q()); }
    // Crossing parameter of the section3 model.
    cplx eta() const { return -I * pi * (sigma + tau) * 0.5; }

    EllipticParams with_convention(NomeConvention c) const { return {sigma, tau, r, c}; }
};

// reduced: use [[m]] as in the lens gamma definitions; raw: keep m itself.
enum class ResidueMode { reduced, raw };

// right_half: Re(omega) > 0 (lattice convention); upper_half: Im(omega) > 0.
enum class Orientation { right_half, upper_half };

struct HyperbolicParams {
    cplx omega1;
    cplx omega2;
    int r = 1;
    Orientation orientation = Orientation::right_half;

    void validate() const
    {
        if (!is_finite(omega1) || !is_finite(omega2)) fail(Errc::invalid_input, "non-finite period");
        if (r < 1) fail(Errc::invalid_input, "r must be >= 1");
        if (orientation == Orientation::right_half) {
            if (!(omega1.real() > 0.0) || !(omega2.real() > 0.0))
                fail(Errc::domain, "Re(omega) must be positive");
        } else if (!(omega1.imag() > 0.0) || !(omega2.imag() > 0.0)) {
            fail(Errc::domain, "Im(omega) must be positive");
        }
    }

    cplx eta() const { return 0.5 * (omega1 + omega2); }

    // omega -> -i omega maps the upper half plane onto the right half plane.
    HyperbolicParams to_right_half() const
    {
        if (orientation == Orientation::right_half) return *this;
        return {-I * omega1, -I * omega2, r, Orientation::right_half};
    }

    HyperbolicParams to_upper_half() const
    {
        if (orientation == Orientation::upper_half) return *this;
        return {I * omega1, I * omega2, r, Orientation::upper_half};
    }
};

} // namespace lensbeta
