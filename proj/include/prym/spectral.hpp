#pragma once

#include "prym/int_mat.hpp"
#include "prym/involution.hpp"

#include <string>
#include <vector>

namespace prym {

// A type I real curve of genus g with k real circles, ell of which lift to
// circles fixed by the spectral involution. h is the genus of the quotient
// half-surface.
struct RealCurveData {
    long long g = 0, k = 0, ell = 0;
    long long h() const { return (g - k + 1) / 2; }
};

void validate_curve(const RealCurveData& c); // throws InvalidCurveData

// Homology of the spectral double cover with the commuting actions of the
// cover involution i and the real structure tau.
struct SpectralHomology {
    RealCurveData curve;
    std::size_t rank = 0; // 8g - 6
    std::vector<std::string> basis_labels;
    IntMat i_act, tau_act;
};

SpectralHomology build(const RealCurveData& c);

// (H, tau): the GL fiber side.
InvolutionLattice jacobian_lattice(const SpectralHomology& s);

// Anti-invariants of i with tau restricted: the SL(2) Prym side.
InvolutionLattice prym_lattice(const SpectralHomology& s);

// Quotient by the saturated i-fixed sublattice with tau induced: the PGL(2)
// side. Computed on the index-2 refinement that adjoins
// (delta_ell + i delta_ell + mu)/2, which keeps the quotient torsion-free
// with the delta classes surviving.
InvolutionLattice pgl2_lattice(const SpectralHomology& s);

struct FiberCounts {
    Integer jacobian_components, sl2_components, pgl2_components;
    std::size_t jacobian_rank = 0, sl2_rank = 0, pgl2_rank = 0;
};

// Component counts computed from the three constructed lattices; the closed
// forms 2^(2 ell - 1), 2^k, 2^k are asserted against the computed values.
FiberCounts fiber_counts(const RealCurveData& c);

} // namespace prym
