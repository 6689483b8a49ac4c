// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>

namespace hetsim {

using ParamMap = std::map<std::string, long long>;

/// Evaluates an integer arithmetic expression over +, -, *, / (exact integer
/// division), parentheses, integer literals and bound parameter names.
/// Raises UnboundParameter, InexactDivision, DivisionByZero, MalformedSpec.
long long eval_expr(std::string_view expr, const ParamMap& params);

/// Like eval_expr but additionally raises NonPositiveResult when the value is
/// not strictly positive (used for sizes and work sizes).
long long eval_positive(std::string_view expr, const ParamMap& params);

/// Syntax check only; raises MalformedSpec on bad syntax. Parameter names need
/// not be bound.
void validate_expr(std::string_view expr);

}  // namespace hetsim
