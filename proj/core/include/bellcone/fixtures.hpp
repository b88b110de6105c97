#pragma once

#include "bellcone/tensor.hpp"

namespace bellcone {

/// x^{s1 s2} = F^{s1 s2}: the PR box.
CorrelationTensor pr_box();

/// CHSH in >=0 form: 1/2 on (-1,-1), (-1,+1), (+1,-1), -1/2 on (+1,+1), 1 on (0,0).
FunctionalTensor chsh_functional();

/// Full correlators c/4 with the PR sign pattern, zero marginals, x^{00} = 1.
CorrelationTensor isotropic_box(const Rational& c);

/// Value of the outcome-flipped lowering of isotropic_box(c) on itself, 1 - c^2/8.
Rational tsirelson_selfdual_value(const Rational& c);

/// Three-party extremal no-signaling box dual to the guess-your-neighbour's-input inequality.
CorrelationTensor gyni_box();

/// Three-party facet functional whose raising is sliwa17_box().
FunctionalTensor sliwa17_functional();

/// The three-party no-signaling box dual to sliwa17_functional(), given entrywise.
CorrelationTensor sliwa17_box();

/// 2^n P(+1...+1 | -1...-1) >= 0.
FunctionalTensor positivity_functional(int n);

}  // namespace bellcone
