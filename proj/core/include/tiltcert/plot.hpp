#pragma once

#include "tiltcert/certify.hpp"
#include "tiltcert/chern.hpp"
#include "tiltcert/tilt.hpp"

#include <string>
#include <vector>

namespace tiltcert {

/// (β, α) box for wall plots, closed.
struct PlotBox {
    Rational beta_lo;
    Rational beta_hi;
    Rational alpha_lo;
    Rational alpha_hi;
};

/// Contour segment with exact endpoints.
struct Segment {
    Point from;
    Point to;
};

/// Four arrows from the origin to Z of the heart generators at (α, β, s = 1/6),
/// plus the dividing line for the applicable half-plane case.
std::string emit_zvectors_svg(const TiltParams& p, const Threefold& x = quadric_threefold());

/// Zero set of wall_polynomial(v, w) on a grid×grid cell lattice. Signs are
/// exact at nodes; saddles are resolved by the exact cell-centre value.
/// Throws std::invalid_argument if grid < 16 or the box is empty.
std::vector<Segment> wall_contour(const ChernCharacter& v, const ChernCharacter& w, int grid, const PlotBox& box,
                                  const Threefold& x = quadric_threefold());

std::string emit_wall_svg(const ChernCharacter& v, const ChernCharacter& w, int grid, const PlotBox& box,
                          const Threefold& x = quadric_threefold());

}  // namespace tiltcert
