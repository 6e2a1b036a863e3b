#pragma once

#include <optional>

namespace xyfse {

// Phase classification of the XY chain at (gamma, h).  Classification is a
// pure function of the couplings and uses exact comparisons: lying on a
// special line is a declaration of intent, not a numerical accident.
enum class Phase {
    gapless_fermion,        // gamma = 0, |h| < 1  (c + cbar = 2)
    gapless_boson,          // |h| = 1, gamma != 0 (c + cbar = 1)
    kitaev_point,           // h = 0, |gamma| = 1
    non_conformal_gapless,  // gamma = 0, |h| = 1 (quadratic dispersion)
    gapped,
};

struct PhasePoint {
    double gamma = 0.0;
    double h = 0.0;

    Phase phase() const;

    // True on the two conformal critical lines (CFT-facing operations only
    // accept these).
    bool critical() const;

    // Fermi momentum: arccos|h| on the gapless-fermion line; pi on the
    // gapless-boson line, matching the cos(pi x) oscillation of the
    // correlator there.  Throws InvalidKf off the critical lines.
    double fermi_momentum() const;

    // c + cbar of the critical line (2 fermion, 1 boson).
    double c_plus_cbar() const;

    bool operator==(const PhasePoint&) const = default;
};

// Bogoliubov dispersion eps_k = sqrt((cos k - h)^2 + gamma^2 sin^2 k).
double dispersion(const PhasePoint& p, double k);

// Paper decay-length formula xi = |gamma| / (sqrt(2) * min(|h-1|, |h+1|)).
// Empty for the gapless and non-conformal points.  Note the Kitaev point is
// accepted (the formula evaluates there) even though the exact correlator is
// a pure contact term; the contact form takes precedence wherever both apply.
std::optional<double> decay_length(const PhasePoint& p);

}  // namespace xyfse
