#pragma once

#include "dirac/schemes.hpp"

namespace dirac::detail {

// Successor state carrying the new level; applies the 2/3 truncation when
// the model asks for it.
inline SchemeState advance(const SchemeState& state, SpinorField next,
                           const std::shared_ptr<const StepKernels>& kernels) {
  if (state.cfg->dealias) {
    next = {two_thirds_truncation(next.phi1), two_thirds_truncation(next.phi2)};
  }
  SchemeState out{std::move(next), std::nullopt, std::nullopt, state.step_index + 1,
                  state.tau,       state.cfg,    kernels};
  return out;
}

}  // namespace dirac::detail
