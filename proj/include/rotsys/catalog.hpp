#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotsys/crossings.hpp"
#include "rotsys/prerotation.hpp"

namespace rotsys {

// A labeled 4-element system (a, b, c, d) is identified by the four bits
// ccw(a; b,c,d), ccw(b; a,c,d), ccw(c; a,b,d), ccw(d; a,b,c) (bit 0 first).
int quadruple_code(const PreRotationSystem& pi, Vertex a, Vertex b, Vertex c, Vertex d);

// The system on {0, 1, 2, 3} with the given code.
PreRotationSystem quadruple_system(int code);

struct QuadrupleEntry {
  bool drawable = false;
  QuadrupleClass cls;
  // Vertex d lies on the side of triangle abc to the left of a -> b -> c.
  bool d_in_abc = false;
};
using QuadrupleTable = std::array<QuadrupleEntry, 16>;

// Derives the table by testing, for each code, the crossing-free hypothesis
// and all six single-crossing hypotheses for planarity of the planarization.
QuadrupleTable derive_quadruple_table();

// Cached result of derive_quadruple_table().
const QuadrupleTable& quadruple_table();

// Throws NotDrawable on the 4-element obstruction.
QuadrupleClass classify_quadruple(const PreRotationSystem& pi, Vertex a, Vertex b, Vertex c, Vertex d);

CrossingMap crossing_map(const PreRotationSystem& pi);

// True iff d lies in the side of triangle abc from which a, b, c read
// counterclockwise.
bool side_contains(const PreRotationSystem& pi, Vertex d, Vertex a, Vertex b, Vertex c);

struct ObstructionCatalog {
  std::optional<PreRotationSystem> pi4o;
  std::optional<PreRotationSystem> pi5a, pi5b;
  std::optional<PreRotationSystem> conv5a, conv5b;
  std::optional<PreRotationSystem> hconv6;
  std::optional<PreRotationSystem> gt_allowed5;
  // Canonical forms of the drawable classes on 5 elements.
  std::vector<PreRotationSystem> drawable5;
  QuadrupleTable quadruples{};

  // Throws CatalogError when the entry is absent.
  static const PreRotationSystem& need(const std::optional<PreRotationSystem>& entry, const char* name);

  std::string to_json() const;
  static ObstructionCatalog from_json(std::string_view text);
};

// The catalog frozen into the library at build time.
const ObstructionCatalog& builtin_catalog();
bool builtin_catalog_available();

enum class DrawingClass { Drawable, Convex, HConvex, GenTwisted };

const char* to_string(DrawingClass cls);

// Forbidden-subconfiguration test against the catalog. GenTwisted requires
// n >= 7 and throws OutOfScope otherwise.
bool check_class(const PreRotationSystem& pi, DrawingClass cls,
                 const ObstructionCatalog& catalog = builtin_catalog());

// Every distinct labeled copy of the given systems, as flat vectors.
std::vector<std::vector<Vertex>> labeled_copies(const std::vector<PreRotationSystem>& systems);

}  // namespace rotsys
