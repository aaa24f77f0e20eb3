#pragma once

#include <string>

#include "goldman/subgroup.hpp"

namespace goldman {

struct PlotOptions {
  SubgroupSpec spec;
  bool has_window = false;
  double xmin = -3.0, xmax = 3.0, ymax = 3.0;
  long qg_p = 0, qg_q = 0;  // both positive enables the quasigeodesic overlay
  long qg_window = 1;
};

/// Upper-half-plane figure: A_x highlighted, the fundamental segment
/// thickened, crossing translates of A_y colored by sign, optionally the
/// quasigeodesic path. Returns an SVG 1.1 document.
std::string svg_plot(const ProjectiveMatrix& x, const ProjectiveMatrix& y, const PlotOptions& opt);

}  // namespace goldman
