#include "xyfse/phase.hpp"

#include <cmath>

#include "xyfse/errors.hpp"

namespace xyfse {

Phase PhasePoint::phase() const {
    const double ah = std::fabs(h);
    if (gamma == 0.0 && ah < 1.0) return Phase::gapless_fermion;
    if (gamma == 0.0 && ah == 1.0) return Phase::non_conformal_gapless;
    if (ah == 1.0) return Phase::gapless_boson;
    if (h == 0.0 && std::fabs(gamma) == 1.0) return Phase::kitaev_point;
    return Phase::gapped;
}

bool PhasePoint::critical() const {
    const Phase ph = phase();
    return ph == Phase::gapless_fermion || ph == Phase::gapless_boson;
}

double PhasePoint::fermi_momentum() const {
    switch (phase()) {
        case Phase::gapless_fermion:
            return std::acos(std::fabs(h));
        case Phase::gapless_boson:
            return M_PI;
        default:
            throw InvalidKf("fermi momentum defined only on the critical lines");
    }
}

double PhasePoint::c_plus_cbar() const {
    switch (phase()) {
        case Phase::gapless_fermion:
            return 2.0;
        case Phase::gapless_boson:
            return 1.0;
        default:
            throw Error("c + cbar defined only on the critical lines");
    }
}

double dispersion(const PhasePoint& p, double k) {
    const double a = std::cos(k) - p.h;
    const double b = p.gamma * std::sin(k);
    return std::sqrt(a * a + b * b);
}

std::optional<double> decay_length(const PhasePoint& p) {
    const Phase ph = p.phase();
    if (ph != Phase::gapped && ph != Phase::kitaev_point) return std::nullopt;
    const double m = std::min(std::fabs(p.h - 1.0), std::fabs(p.h + 1.0));
    return std::fabs(p.gamma) / (std::sqrt(2.0) * m);
}

}  // namespace xyfse
