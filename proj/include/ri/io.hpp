// io.hpp — JSON and CSV serialization of states, parameters and results

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ri/analytic.hpp"
#include "ri/collision.hpp"
#include "ri/metrics.hpp"
#include "ri/model.hpp"
#include "ri/protocols.hpp"
#include "ri/thermo.hpp"

namespace ri::io {

using nlohmann::json;

// 17 significant digits, as %.17g; parses back to the same double.
std::string format_double(double x);

json to_json(const RIParams& p);
// Missing fields keep their defaults; unknown fields raise ValidationError.
RIParams params_from_json(const json& j);

json to_json(const QubitState& s);
QubitState state_from_json(const json& j);

json to_json(const analytic::RelaxationSummary& s);
json to_json(const metrics::ConvergenceReport& r, const thermo::Housekeeping& h);
json to_json(const protocols::EnsembleSummary& s);

// Extra leading columns shared by every row, e.g. the sweep coordinates.
struct Prefix {
    std::vector<std::string> names;
    std::vector<double> values;
};

// Columns: n, p, c_re, c_im and, with a ledger, w, q, de, first_law_residual;
// randomized runs append the drawn j_xx, j_yy, j_zz.
// Row 0 has empty ledger fields; every other row carries the ledger of the
// collision that produced it.
void write_trajectory_header(std::ostream& os, bool with_ledger, const Prefix& prefix = {},
                             bool with_draws = false);
void write_trajectory_rows(std::ostream& os, const TrajectoryRecord& rec, const Prefix& prefix = {});

} // namespace ri::io
