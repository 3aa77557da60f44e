#pragma once

#include <string>

#include <json.hpp>

#include "cqg/classical_eval.hpp"
#include "cqg/dual_data.hpp"
#include "cqg/fourier_core.hpp"

namespace cqg {

using Json = nlohmann::ordered_json;

/// {name, irreps: [{label, n, q_diag: [...]}]}
Json to_json(const DualDescriptor& dual);
DualPtr dual_from_json(const Json& j);

/// {dual: name, entries: [{label, re: [[...]], im: [[...]]}]}
Json to_json(const FourierCoeffs& f);
/// The dual named in the document must match `dual`.
FourierCoeffs coeffs_from_json(const Json& j, const DualPtr& dual);

/// {name, order, mult: [[...]], irreps: [{label, n, matrices: [{re, im}, ...]}]}
Json to_json(const FiniteGroupTable& table);
FiniteGroupTable finite_group_from_json(const Json& j);
FiniteGroupTable load_finite_group(const std::string& path);

Json matrix_to_json(const MatrixC& m);
MatrixC matrix_from_json(const Json& re, const Json& im);

}  // namespace cqg
