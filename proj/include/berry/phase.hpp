#ifndef BERRY_PHASE_HPP
#define BERRY_PHASE_HPP

#include <functional>
#include <vector>

#include "berry/linalg.hpp"
#include "berry/model.hpp"

namespace berry {

struct SimulationConfig {
    int periods = 1;
    int steps_per_period = 20000;
    int record_stride = 1;
    StateLabel state = StateLabel::plus1;

    // Throws on violated invariants (steps >= 100, stride divides steps).
    void validate() const;
};

// Recorded time evolution: states and the instantaneous eigenstate
// overlaps <psi_n(t)|Psi(t)> the phase extraction runs on.
struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::vector<Complex> reference_overlaps;
    std::vector<double> energies;  // <Psi|H(t)|Psi> at the recorded times
};

struct PhaseReport {
    double total_phase = 0.0;        // unwrapped arg of the tracked overlap
    double dynamic_phase = 0.0;      // -E_n * periods * T
    double geometric_phase = 0.0;    // wrap(total - dynamic) into (-pi, pi]
    double predicted_geometric = 0.0;  // wrap(-n * Omega * periods)
    double solid_angle = 0.0;
    double leakage = 0.0;
    double final_norm_defect = 0.0;
};

// Route A. Midpoint-exponential stepping of the lab-frame Schroedinger
// equation starting from psi_n(0); unconditionally unitary, second-order
// accurate in the step size.
Trajectory propagate(const LevelParams& p, const FieldConfig& f,
                     const SimulationConfig& cfg);

// Unwraps the recorded overlaps into total/dynamic/geometric phases.
// Leakage is not filled in here (see leakage()).
PhaseReport extract_phases(const Trajectory& traj, const Spectrum& spec,
                           const SimulationConfig& cfg, const FieldConfig& f);

// Route B. i * integral over one period of psi_n^+ (d psi_n / dt) on the
// closed-form lab-frame eigenstates, centered finite differences. Throws
// when the imaginary residue exceeds 1e-6. fd_step <= 0 selects the
// default derivative step T / 1e6.
double berry_connection_integral(const LevelParams& p, const FieldConfig& f,
                                 StateLabel n, int samples, double fd_step = -1.0);

// Route C. phi_n^+ R (dR^+/dt) phi_n evaluated through the conjugated
// generator; equals -i * n * omega * cos(theta).
Complex connection_via_operator(StateLabel n, MixingAngle a, double theta,
                                double omega);

// Multiplies the recorded states by exp(i lambda(t)) and re-extracts the
// phases; lambda must be periodic as a phase over the trajectory span.
PhaseReport gauge_transform_and_reextract(const Trajectory& traj,
                                          const std::function<double(double)>& lambda,
                                          const Spectrum& spec,
                                          const SimulationConfig& cfg,
                                          const FieldConfig& f);

// Max over recorded times of the population outside the followed
// eigenstate; the adiabaticity diagnostic.
double leakage(const Trajectory& traj, const LevelParams& p, const FieldConfig& f,
               StateLabel n);

// Both degenerate cross terms psi_+1^+ d(psi_-1)/dt and psi_-1^+ d(psi_+1)/dt
// by finite differences on the closed forms.
struct DegenerateCrossTerms {
    Complex plus_to_minus;
    Complex minus_to_plus;
};

DegenerateCrossTerms degenerate_cross_term(double theta, double phi, double omega);

// Omega = 2 pi (1 - cos theta).
double solid_angle(double theta);

// wrap(-n * Omega * periods) into (-pi, pi].
double predicted_berry_phase(StateLabel n, double theta, int periods);

}  // namespace berry

#endif
