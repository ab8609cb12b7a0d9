#include "rosenau/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rosenau/errors.hpp"

namespace rosenau {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string orbit_csv(const Orbit& orbit) {
  std::ostringstream os;
  os << "t,v,w\n";
  for (std::size_t i = 0; i < orbit.size(); ++i)
    os << fmt17(orbit.t[i]) << ',' << fmt17(orbit.y[i].v) << ','
       << fmt17(orbit.y[i].w) << '\n';
  for (const auto& e : orbit.events)
    os << "# event," << to_string(e.kind) << ',' << fmt17(e.t) << ','
       << fmt17(e.state.v) << ',' << fmt17(e.state.w) << '\n';
  return os.str();
}

std::string curve_csv(std::span<const CurvePoint> points) {
  std::ostringstream os;
  os << "delta,eps_min,eps0,entry,iterations\n";
  for (const auto& p : points)
    os << fmt17(p.delta) << ',' << fmt17(p.eps_min) << ',' << fmt17(p.eps0) << ','
       << to_string(p.entry.kind) << ',' << p.iterations << '\n';
  return os.str();
}

std::string profile_csv(const SingularProfile& profile) {
  std::ostringstream os;
  os << "v,G,Z0\n";
  for (std::size_t i = 0; i < profile.v.size(); ++i)
    os << fmt17(profile.v[i]) << ',' << fmt17(profile.G[i]) << ','
       << fmt17(profile.Z0[i]) << '\n';
  return os.str();
}

std::string branch_csv(std::span<const BranchSample> samples) {
  std::ostringstream os;
  os << "v,w_plus,w_minus\n";
  for (const auto& s : samples) {
    os << fmt17(s.v) << ',';
    if (s.roots.w_plus) os << fmt17(*s.roots.w_plus);
    os << ',';
    if (s.roots.w_minus) os << fmt17(*s.roots.w_minus);
    os << '\n';
  }
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) domain_fail("io_error", "cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) domain_fail("io_error", "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) domain_fail("io_error", "rename to " + path.string() + " failed: " + ec.message());
}

}  // namespace rosenau
