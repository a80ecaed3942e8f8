#pragma once

#include <string>

#include <json.hpp>

#include "mpqp/problem.hpp"
#include "mpqp/solution.hpp"

namespace mpqp {

/// Problem documents carry n, m, p, H, f_coeff, f_offset, A, b_coeff,
/// b_offset, theta0_G, theta0_g. Matrices are arrays of rows.
///
/// Throws ParseError for malformed documents and ValidationError for shape or
/// definiteness problems; both name the offending field.
MpQP problem_from_json(const nlohmann::json& doc);
nlohmann::json problem_to_json(const MpQP& qp);

MpQP load_problem(const std::string& path);
void save_problem(const MpQP& qp, const std::string& path);

/// Hex SHA-256 of the canonical problem document.
std::string problem_digest(const MpQP& qp);

nlohmann::json solution_to_json(const ExplicitSolution& sol);
ExplicitSolution solution_from_json(const nlohmann::json& doc);

ExplicitSolution load_solution(const std::string& path);
void save_solution(const ExplicitSolution& sol, const std::string& path);

/// Compact single-line dump followed by a newline.
std::string to_text(const nlohmann::json& doc);

}  // namespace mpqp
