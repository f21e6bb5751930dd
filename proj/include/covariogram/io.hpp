#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "covariogram/identities.hpp"
#include "covariogram/reconstruct.hpp"
#include "covariogram/symmetry.hpp"

namespace cov::io {

using json = nlohmann::json;

/// {"type": "polygon", "vertices": [[x, y], ...]} (counterclockwise) or
/// {"type": "support", "a0": .., "cos": [a1, a2, ..], "sin": [b1, b2, ..]};
/// a support body may also be {"type": "ellipse", "a": .., "b": ..,
/// "center": [x, y]} or {"type": "disk", "r": .., "center": [x, y]}.
ConvexBody body_from_json(const json& j);
json body_to_json(const ConvexBody& k);
ConvexBody read_body(const std::string& path);

/// CSV with header "x,y,g", one row per node, x-index fastest.
void write_grid_csv(std::ostream& os, const CovariogramGrid& g);
CovariogramGrid read_grid_csv(std::istream& is);
CovariogramGrid read_grid(const std::string& path);

/// CSV with header "t,x,y"; t is cumulative arc length.
void write_polyline_csv(std::ostream& os, const std::vector<Vec2>& pts);

/// {"vertices": [[x, y] x 6]}, counterclockwise, h1 first.
SymmetricHexagon hexagon_from_json(const json& j);

json to_json(const Vec2& v);
json to_json(const Mat2& m);
json to_json(const HessianReport& r);
json to_json(const SymmetryVerdict& v);
json to_json(const HexagonTestReport& r);
json to_json(const Conjugate& c);
json to_json(const NormalPair& np);
json to_json(const ArcTrace& tr);
json to_json(const Comparison& c);

}  // namespace cov::io
