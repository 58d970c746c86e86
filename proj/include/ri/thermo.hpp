// thermo.hpp — Work, heat and system-energy bookkeeping per collision
//
// Sign conventions: q > 0 is energy deposited into the ancilla; w is the change
// of the interaction energy, and cumulative "invested" work carries an extra minus
// sign so that positive values mean work supplied to the process.

#pragma once

#include "ri/collision.hpp"
#include "ri/ledger.hpp"
#include "ri/model.hpp"

namespace ri::thermo {

// Trace definitions evaluated on rho_S (x) rho_A. Throws InternalConsistencyError
// when |w + q + de_s| exceeds kFirstLawTol.
StepLedger step_energetics_numeric(const QubitState& state, const RIParams& params,
                                   const CollisionUnitary& u);

// Closed forms. Depend on the state only through its population.
StepLedger step_energetics_closed(const QubitState& state, const RIParams& params);

// Invested work W(n_stop) = -sum_{k=1}^{n_stop} W_I^(k). n_stop must be a stored index.
double cumulative_work(const TrajectoryRecord& trajectory, long long n_stop);

struct Housekeeping {
    double w_inf;
    double q_inf;
};

// Closed-form ledger at the steady population. Throws DegenerateParameters.
Housekeeping asymptotic_housekeeping(const RIParams& params);

// Slope and offset of the system-energy change, de_s = (A+B) p + [p_A(B-A) - B].
struct EnergyCoefficients {
    double a;
    double b;
};

EnergyCoefficients energy_coefficients(const RIParams& params);

// (A+B) eta^n (p0 - p_inf): system-energy change of collision n+1.
double system_energy_change(long long n, double p0, const RIParams& params);

} // namespace ri::thermo
