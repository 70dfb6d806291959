// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/radius.hpp"

namespace bohr {

/// Lacunary shape (m, p): series supported on the indices kp + m.
struct Shape {
  int m = 0;
  int p = 1;
  bool operator==(const Shape&) const = default;
};

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(std::string_view name);

/// Campaign ids: ThmB, LemmaD, ThmC, ThmC34 (ThmC and Thm34 together),
/// Thm31, Thm32, Cor33, Thm34, Thm41, Cor43, BombieriUpper, BBUpper,
/// VecThm34, VecThm41, VecCor42, VecCor43, Lemma21.
const std::vector<std::string>& campaign_ids();

/// The sharp-radius equation behind a campaign id or radius name, if any.
std::optional<RadiusId> radius_id_for(std::string_view id);

struct CampaignConfig {
  std::vector<std::string> theorems;
  std::vector<Shape> shapes{{0, 1}};
  std::vector<double> t_values{2.0};  // only read by the vector ids
  int samples = 100;
  std::uint64_t seed = 1;
  std::size_t depth = 6;     // Schur parameters per sample
  std::size_t order = 256;   // raised when the grid needs more terms
  double r_start = 0.0;
  double r_stop = 0.95;
  double r_step = 0.005;
  double tolerance = 1e-9;
  double s = 1.0;            // Thm31 exponent
  int directions = 50;       // random directions besides e_1
  std::size_t dimension = 3;
  int a_steps = 2000;
  std::string output;        // empty: no file
  ReportFormat format = ReportFormat::Json;
};

/// Throws ParameterOutOfRange on an invalid config.
void validate(const CampaignConfig& config);

/// Flat key-value JSON; unknown keys raise ParameterOutOfRange. Shapes are
/// written as [m, p] pairs and an infinite t as the string "inf".
CampaignConfig config_from_json(std::string_view text);

struct ReportRow {
  std::string theorem;
  int p = 1;
  int m = 0;
  std::optional<double> t;
  std::optional<double> radius;
  std::optional<double> radius_closed_form;
  int samples = 0;
  int grid_points = 0;
  std::optional<double> min_margin;
  std::optional<double> sharpness_max;
  bool pass = true;
  bool operator==(const ReportRow&) const = default;
};

struct Report {
  std::vector<ReportRow> rows;
  bool passed() const;
  bool operator==(const Report&) const = default;
};

/// Runs every theorem over the shapes it admits; progress lines go to
/// `progress` when given.
Report run_campaign(const CampaignConfig& config, std::ostream* progress = nullptr);

std::string format_report(const Report& report, ReportFormat format);
Report report_from_json(std::string_view text);

/// Writes format_report to `path`; IoError when the file cannot be written.
void emit_report(const Report& report, ReportFormat format, const std::string& path);

struct RadiusTableRow {
  int p = 1;
  int m = 0;
  double radius = 0.0;
  std::optional<double> closed_form;
};

/// Radii over the triangle 1 <= p <= p_max, 0 <= m <= p.
std::vector<RadiusTableRow> radius_table(RadiusId id, int p_max, double tol = kDefaultRadiusTolerance);

}  // namespace bohr
