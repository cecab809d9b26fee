#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "treegroups/presentation.hpp"
#include "treegroups/rep_table.hpp"
#include "treegroups/verify.hpp"

namespace treegroups {

nlohmann::json rep_to_json(const RepTable& rep);
/// Throws std::invalid_argument on schema violations.
RepTable rep_from_json(const nlohmann::json& j);

void write_rep(const std::filesystem::path& path, const RepTable& rep);
RepTable read_rep(const std::filesystem::path& path);

nlohmann::json report_to_json(const CheckReport& report);

void write_text(const std::filesystem::path& path, const std::string& text);

/// P6 image of the window [-2, 2]^2, one white pixel per point on black.
/// Points at infinity or outside the window are skipped; the skipped count
/// is returned through `dropped` when given.
std::string render_ppm(const std::vector<SpherePoint<double>>& points, int width, int height,
                       std::size_t* dropped = nullptr);

/// "re,im" header, one finite point per line, shortest round-trip decimals.
std::string points_csv(const std::vector<SpherePoint<double>>& points);

/// Shortest decimal that parses back to exactly `x`, independent of locale.
std::string format_double(double x);

}  // namespace treegroups
