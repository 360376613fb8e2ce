#include "qinfo/pure_state.hpp"

#include <cmath>
#include <sstream>

namespace qinfo {

PureState::PureState(std::vector<cplx> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw ZeroVector("pure state needs at least one amplitude");
    }
    double norm_sq = 0.0;
    for (const cplx& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NotFinite("pure state has non-finite amplitudes");
        }
        norm_sq += std::norm(a);
    }
    if (norm_sq < 1e-24) {
        throw ZeroVector("pure state amplitudes are all zero");
    }
    if (std::abs(norm_sq - 1.0) > kNormTolerance) {
        std::ostringstream os;
        os << "pure state norm^2 = " << norm_sq << " differs from 1";
        throw NotNormalized(os.str());
    }
}

}  // namespace qinfo
