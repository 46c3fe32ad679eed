#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "centerkit/central.hpp"
#include "centerkit/harness.hpp"
#include "centerkit/symmetry.hpp"

namespace centerkit {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "centerkit/1";

/// Reads one object document:
///   {"type":"multiset","points":[[x,y,...],...]}
///   {"type":"weighted","items":[{"point":[x,y],"weight":w},...]}
///   {"type":"triangle","vertices":[[x,y],[x,y],[x,y]]}
///   {"type":"polygon","vertices":[[x,y],...]}
///   {"type":"region","kind":"points","points":[...]}
///   {"type":"region","kind":"curve","vertices":[...]}
///   {"type":"region","kind":"area","outer":[...],"holes":[[...],...]}
/// A top-level "schema" member is optional but must be "centerkit/1" when
/// present. Polygons need not be simple; every other invariant is enforced.
/// Throws ParseError whose message starts with the offending JSON path.
Object parse_object(const Json& doc);
Object parse_object(const std::string& text);
inline Object parse_object(const char* text) { return parse_object(std::string(text)); }

Json to_json(const Point2& p);
Json to_json(const Object& o);

/// {"center_id":..., "point":[x,y]} for one center, else a "centers" array.
Json centers_json(const std::vector<NamedPoint>& centers);
Json to_json(const EquivarianceReport& r);
Json to_json(const SymmetryGroup& g);
Json to_json(const std::vector<AdmissibilityEntry>& entries);
Json to_json(const CoincidenceLocus& locus);
Json orbit_json(const std::vector<Polygon>& orbit);

/// Adds the top-level schema tag.
Json versioned(Json doc);
/// Stable text form: fixed key order, shortest round-trip numbers.
std::string dump(const Json& doc);

struct SvgScene {
    std::vector<NamedPoint> centers;
    std::vector<Line> lines;
    /// Extra outlines drawn faintly, e.g. an automorphism orbit.
    std::vector<Polygon> overlay;
};

/// SVG 1.1 picture of the object and the scene. Each center gets its own
/// glyph (triangle, square, circle, diamond, ...) and carries data-center,
/// data-x and data-y attributes with the unflipped coordinates.
std::string render_svg(const Object& o, const SvgScene& scene);

}  // namespace centerkit
