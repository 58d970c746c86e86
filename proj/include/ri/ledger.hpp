// ledger.hpp — Per-collision energy bookkeeping record

#pragma once

namespace ri {

// Energy exchanged during one collision.
//   w        : interaction work W_I (change of <H_I>)
//   q        : heat deposited into the ancilla (change of <H_A>)
//   de_s     : change of the system energy <H_S>
//   residual : w + q + de_s, zero by energy conservation
struct StepLedger {
    double w{0.0};
    double q{0.0};
    double de_s{0.0};
    double residual{0.0};
};

inline constexpr double kFirstLawTol = 1e-11;

} // namespace ri
