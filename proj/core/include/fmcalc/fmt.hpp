#pragma once

#include "fmcalc/ring.hpp"

namespace fmcalc {

// Cohomological Fourier–Mukai transform Φ on Chern vectors.
ChernVector phi(const BaseGeometry& g, const ChernVector& v);

// Cohomological transform of the inverse-direction functor Φ̂.
// Both composites phi_hat∘phi and phi∘phi_hat are negation.
ChernVector phi_hat(const BaseGeometry& g, const ChernVector& v);

// Twisted "row swap" for classes with n = x = 0: takes ch^{p^*D̄}(E) to
// ch^{p^*D}(ΦE), where D̄ = D − ½K_B:
//   (S, η, a, s) ↦ (η, −S, s, −a).
// Throws DomainError when n or x is nonzero.
ChernVector fiber_swap_rule(const BaseGeometry& g, const ChernVector& tw);

} // namespace fmcalc
