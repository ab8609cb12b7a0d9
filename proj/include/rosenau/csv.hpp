#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "rosenau/ode.hpp"
#include "rosenau/shooting.hpp"
#include "rosenau/singular.hpp"

namespace rosenau {

/// %.17g — enough digits to round-trip, byte-stable for diffing.
std::string fmt17(double x);

/// header `t,v,w`, one row per sample, events appended as commented footer
/// lines `# event,kind,t,v,w`.
std::string orbit_csv(const Orbit& orbit);

/// header `delta,eps_min,eps0,entry,iterations`.
std::string curve_csv(std::span<const CurvePoint> points);

/// header `v,G,Z0`.
std::string profile_csv(const SingularProfile& profile);

/// header `v,w_plus,w_minus`, empty fields when a root is absent.
std::string branch_csv(std::span<const BranchSample> samples);

/// Write via temp file + rename so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace rosenau
