// Copyright 2026 The nctorus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCTORUS_TOOLS_THETA_EXPR_HPP
#define NCTORUS_TOOLS_THETA_EXPR_HPP

#include <string_view>

namespace nctorus::cli {

// Evaluates a small arithmetic expression: decimal numbers, sqrtN or
// sqrt(expr), unary signs, + - * / and parentheses. "sqrt2-1" is the usual
// irrational test value. Throws Error(ParseError) on malformed input.
double evaluate_expression(std::string_view text);

}  // namespace nctorus::cli

#endif  // NCTORUS_TOOLS_THETA_EXPR_HPP
