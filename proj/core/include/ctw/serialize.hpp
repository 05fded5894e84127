// SPDX-License-Identifier: Apache-2.0

#ifndef CTW_SERIALIZE_HPP
#define CTW_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "ctw/expr.hpp"
#include "ctw/harness.hpp"
#include "ctw/matrix_oracle.hpp"

namespace ctw {

using Json = nlohmann::json;

Json to_json(const Finding& f);
Json to_json(const Report& r);
Report report_from_json(const Json& j);
Json to_json(const SuiteDescriptor& d);
/// log10_error_bound is null when the verdict was proven exactly.
Json to_json(const EqualityVerdict& v);
Json to_json(const DagStats& s);

/// Node table in topological order (children first); "root" indexes into it.
/// Lengths are decimal strings since they routinely exceed 64 bits.
Json dump_expr(const Expr& e);

}  // namespace ctw

#endif  // CTW_SERIALIZE_HPP
