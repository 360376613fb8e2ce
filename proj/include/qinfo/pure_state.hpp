#pragma once

#include <vector>

#include "qinfo/complex_matrix.hpp"
#include "qinfo/errors.hpp"

namespace qinfo {

// Unit-norm complex amplitude vector; the generator of rank-one density
// matrices. Immutable after construction.
class PureState {
public:
    static constexpr double kNormTolerance = 1e-10;

    explicit PureState(std::vector<cplx> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

private:
    std::vector<cplx> amplitudes_;
};

}  // namespace qinfo
