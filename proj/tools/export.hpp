#pragma once

#include <string>

#include "slhelix/helix.hpp"

namespace slhelix::cli {

// Wavefront OBJ of the Hopf-projected surface grid (nu x nv vertices, quad
// faces) plus a sidecar CSV with the raw R^4_2 coordinates and the per-vertex
// scalar attributes cos(theta), K and phi. Returns the CSV path.
std::string write_mesh(const HelixSurface& s, int nu, int nv,
                       const std::string& obj_path);

// OBJ of the Hopf projection alone (vertices + quad faces).
void write_hopf_mesh(const HelixSurface& s, int nu, int nv,
                     const std::string& obj_path);

} // namespace slhelix::cli
