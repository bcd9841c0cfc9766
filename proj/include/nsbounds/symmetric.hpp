#ifndef NSBOUNDS_SYMMETRIC_HPP
#define NSBOUNDS_SYMMETRIC_HPP

#include "nsbounds/states.hpp"

namespace nsb {

/// Phase rotation c_n -> e^{i n theta} c_n.
PhaseAmplitudes apply_phase(const PhaseAmplitudes& state, double theta);

/// Continuous phase average: projects onto the diagonal.
SymmetricBlockDensity twirl_u1(const SymmetricBlockDensity& rho);

/// Discrete phase average over 2*pi*k/(n_sites+1), k = 0..n_sites.
/// Kills every coherence [m, mbar] with (m - mbar) not a multiple of
/// n_sites + 1.
SymmetricBlockDensity twirl_zn(const SymmetricBlockDensity& rho, int n_sites);

/// Uhlmann fidelity tr sqrt(sqrt(sigma) rho sqrt(sigma)); equals |<psi|phi>|
/// for pure inputs.
double uhlmann_fidelity(const SymmetricBlockDensity& rho, const SymmetricBlockDensity& sigma);

/// The sender-side Fourier measurement leaves the receiver with the seed
/// rotated to theta + 2*pi*k/(N+1), each outcome equally likely. N is the
/// seed's top excitation number (dim - 1).
Ensemble remote_prepare(const PhaseAmplitudes& seed, double theta);

}  // namespace nsb

#endif
