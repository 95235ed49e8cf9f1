#include "qse/params.hpp"

#include <cmath>

namespace qse {

void PhysicalParams::validate(bool allow_zero_mass) const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("PhysicalParams: " + msg); };
    if (!(alpha > 0.0) || !std::isfinite(alpha)) fail("alpha must be positive and finite");
    if (!(Z >= 0.0) || !std::isfinite(Z)) fail("Z must be nonnegative and finite");
    if (allow_zero_mass ? !(m >= 0.0) : !(m > 0.0)) fail("m must be positive");
    if (!std::isfinite(m)) fail("m must be finite");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) fail("lambda must be positive and finite");
    if (N < 1) fail("N must be >= 1");
    if (K < 1) fail("K must be >= 1");
}

std::pair<double, int> reduce_charges(const std::vector<double>& charges, double Zcap) {
    if (charges.empty()) throw std::domain_error("reduce_charges: need at least one nucleus");
    if (!(Zcap >= 0.0)) throw std::domain_error("reduce_charges: cap must be nonnegative");
    for (double z : charges) {
        if (!(z >= 0.0)) throw std::domain_error("reduce_charges: negative charge");
        if (z > Zcap) throw std::domain_error("reduce_charges: charge exceeds cap");
    }
    return {Zcap, static_cast<int>(charges.size())};
}

}  // namespace qse
