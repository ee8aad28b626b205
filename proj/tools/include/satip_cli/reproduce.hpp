#pragma once

#include <nlohmann/json.hpp>

#include "satip/quasipoly/positive_form.hpp"

namespace satip::cli {

using nlohmann::json;

// Each report is {"rows": [...], "passed": p, "failed": f}; every row has a
// "status" of "PASS" or "FAIL" and the fields needed to see why.

// Kronecker stretching rows: N samples, period bound 2, degree bound 2;
// constituents compared exactly and the positive form's series compared with
// the printed rational function on 12 terms.
json reproduce_kronecker(std::size_t threads = 1, long horizon = 6);

// Symmetric-invariant Hilbert quasi-polynomials, k = 2..4: printed rationals
// compared within 1e-10, samples checked against partition counts to n = horizon.
json reproduce_syminv(long horizon = 60);

// G/P Hilbert polynomials: leading coefficient exact, the rest within 1e-6
// of the printed values.
json reproduce_gp();

std::string positive_form_string(const quasipoly::PositiveForm& f);

}  // namespace satip::cli
