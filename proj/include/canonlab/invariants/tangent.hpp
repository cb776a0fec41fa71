#pragma once

#include <stdexcept>

#include "canonlab/groebner/groebner.hpp"

namespace canonlab {

class NotSaturatedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// dim Hom(I, R/I)_0, the tangent space to the Hilbert scheme at a saturated
/// homogeneous I. Throws NotSaturatedError when I differs from its saturation.
template <class K>
long tangent_dim(const Ideal<K>& I);

}  // namespace canonlab
