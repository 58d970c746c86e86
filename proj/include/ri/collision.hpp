// collision.hpp — Exact collision unitary and brute-force iteration of the collision map

#pragma once

#include <cstdint>
#include <vector>

#include "ri/ledger.hpp"
#include "ri/linalg.hpp"
#include "ri/model.hpp"

namespace ri {

// U = exp(-i H_tot tau), assembled from the two invariant 2x2 blocks
// {|du>, |ud>} (one excitation) and {|dd>, |uu>} (zero or two).
class CollisionUnitary {
public:
    explicit CollisionUnitary(const RIParams& params);

    const linalg::C4Matrix& matrix() const noexcept { return u_; }
    const RIParams& params() const noexcept { return params_; }
    std::uint64_t params_fingerprint() const noexcept { return fingerprint_; }

    // Throws ContractViolation if `params` differ from the ones that built U.
    void check_built_from(const RIParams& params) const;

private:
    RIParams params_;
    std::uint64_t fingerprint_;
    linalg::C4Matrix u_;
};

CollisionUnitary collision_unitary(const RIParams& params);

// One collision evaluated on the full 4x4 state:
//   rho_S' = Tr_A[U (rho_S (x) rho_A) U^dagger].
QubitState ri_step(const QubitState& state, const CollisionUnitary& u, const QubitState& ancilla);

// The same map reduced to (p, c) coordinates:
//   p' = population_slope * p + population_offset
//   c' = coherence_direct * c + coherence_conjugate * conj(c)
// Coefficients are read off by pushing basis operators through the exact channel.
struct CollisionChannel {
    double population_slope{1.0};
    double population_offset{0.0};
    Complex coherence_direct{1.0, 0.0};
    Complex coherence_conjugate{0.0, 0.0};

    QubitState apply(const QubitState& s) const {
        return {population_slope * s.p + population_offset,
                coherence_direct * s.c + coherence_conjugate * std::conj(s.c)};
    }
};

CollisionChannel collision_channel(const CollisionUnitary& u, const QubitState& ancilla);

// Trace-definition energy probe: the Heisenberg-picture changes
// U^dagger X U - X for X in {H_I, H_A, H_S}, so each ledger entry is Tr[dX rho_S (x) rho_A].
struct EnergyProbe {
    linalg::C4Matrix d_interaction;
    linalg::C4Matrix d_ancilla;
    linalg::C4Matrix d_system;

    StepLedger evaluate(const QubitState& state, const QubitState& ancilla) const;
};

EnergyProbe energy_probe(const CollisionUnitary& u);

// Coupling values drawn by randomized protocols, one per collision.
struct CouplingDraw {
    double j_xx;
    double j_yy;
    double j_zz;
};

struct TrajectoryRecord {
    RIParams params;
    long long n_steps{0};
    std::vector<long long> n;            // collision count of each stored state
    std::vector<QubitState> states;      // states[0] is the initial state
    std::vector<StepLedger> ledgers;     // ledgers[i-1] produced states[i]; empty without ledger
    std::vector<double> invested_work;   // -sum of W_I up to n[i]; empty without ledger
    std::vector<CouplingDraw> draws;     // per-collision couplings of randomized runs

    bool has_ledger() const noexcept { return !invested_work.empty(); }
    const QubitState& final_state() const { return states.back(); }
};

struct TrajectoryOptions {
    bool with_ledger{false};
    long long stride{1}; // keep the first, the last and every stride-th state
};

TrajectoryRecord run_trajectory(const QubitState& state0, const RIParams& params, long long n_steps,
                                const TrajectoryOptions& options = {});

inline TrajectoryRecord run_trajectory(const QubitState& state0, const RIParams& params,
                                       long long n_steps, bool with_ledger) {
    return run_trajectory(state0, params, n_steps, TrajectoryOptions{with_ledger, 1});
}

} // namespace ri
