#ifndef HAUSDYN_PLOT_HPP
#define HAUSDYN_PLOT_HPP

#include <filesystem>
#include <string>

#include "hausdyn/simulation.hpp"

namespace hausdyn {

// Self-contained SVG: one polyline per grid point, legend labelled with the
// tax values, axes labelled "periods" / "log deviation of q".
std::string sweep_svg(const SweepResult& sweep);
std::string irf_svg(const ImpulseResponse& irf, const TaxPolicy& tax, ShockKind shock);

void render_plot(const SweepResult& sweep, const std::filesystem::path& path);
void render_plot(const ImpulseResponse& irf, const TaxPolicy& tax, ShockKind shock,
                 const std::filesystem::path& path);

}  // namespace hausdyn

#endif  // HAUSDYN_PLOT_HPP
