// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rkhs/counterexample.hpp"
#include "rkhs/douglas.hpp"
#include "rkhs/kernel.hpp"
#include "rkhs/pick.hpp"
#include "rkhs/shift.hpp"

namespace rkhs::io {

using json = nlohmann::ordered_json;

// Kernel specs: {"variant": "...", "coeffs": [...], "dimension": n,
// "domain_radius": r, "left": {...}, "right": {...}}. Coefficients may be
// integers, decimals or "p/q" strings.
KernelSpec kernel_from_json(const json& j);
json kernel_to_json(const KernelSpec& spec);
/// A builtin name, an inline JSON object, or a path to a JSON file.
KernelSpec kernel_from_argument(const std::string& arg);

/// One point per line, columns re_1,im_1[,re_2,im_2,...], optional header and
/// optional trailing label column. Errors carry the line number.
PointSetd read_points_csv(std::istream& in);
PointSetd read_points_csv_file(const std::string& path);
/// "re,im[,re,im...]".
Pointd parse_point(const std::string& text);

json complex_to_json(const cdouble& z);
json point_to_json(const Pointd& p);
/// Rows of [re, im] pairs.
json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const json& j);

/// {"variables": n, "entries": [[ [ {"exp": [...], "coef": c}, ... ], ...], ...]}
/// where c is a number, a "p/q" string or an [re, im] pair.
PolynomialMatrixd polynomial_matrix_from_json(const json& j);
json polynomial_matrix_to_json(const PolynomialMatrixq& m);

json to_json(const PsdVerdict& v);
json to_json(const NpReport& r);
json to_json(const ReciprocalSeries& s);
json to_json(const OracleVerdict& v);
json to_json(const FactorizationResult& r);
json to_json(const IdentityReport& r);
json to_json(const NormCertificate& c);
json to_json(const std::vector<GrowthRow>& rows);
std::string growth_csv(const std::vector<GrowthRow>& rows);

json read_json_file(const std::string& path);

}  // namespace rkhs::io
