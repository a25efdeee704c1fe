#include "rotsys/catalog.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <mutex>
#include <set>

#include "rotsys/combinatorics.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/planarization.hpp"

namespace rotsys {

extern const char* const kBuiltinCatalogJson;

int quadruple_code(const PreRotationSystem& pi, Vertex a, Vertex b, Vertex c, Vertex d) {
  return (pi.ccw(a, b, c, d) ? 1 : 0) | (pi.ccw(b, a, c, d) ? 2 : 0) | (pi.ccw(c, a, b, d) ? 4 : 0) |
         (pi.ccw(d, a, b, c) ? 8 : 0);
}

PreRotationSystem quadruple_system(int code) {
  std::vector<std::vector<Vertex>> rows(4);
  for (int v = 0; v < 4; ++v) {
    std::vector<Vertex> others;
    for (int u = 0; u < 4; ++u)
      if (u != v) others.push_back(u);
    if (code >> v & 1)
      rows[v] = others;
    else
      rows[v] = {others[0], others[2], others[1]};
  }
  return PreRotationSystem(rows);
}

QuadrupleTable derive_quadruple_table() {
  QuadrupleTable table{};
  const Vertex q[4] = {0, 1, 2, 3};
  for (int code = 0; code < 16; ++code) {
    const auto pi = quadruple_system(code);
    std::vector<std::pair<QuadrupleClass, PlanarizationGraph>> fits;

    auto g0 = PlanarizationGraph::skeleton(4, {});
    if (euler_characteristic(embed(pi, g0)) == 2) fits.emplace_back(QuadrupleClass{}, g0);
    for (int p = 0; p < 3; ++p)
      for (int h = 0; h < 2; ++h) {
        auto [e, f] = pairing_edges(static_cast<Pairing>(p), q);
        auto g = PlanarizationGraph::skeleton(4, {CrossingPair{e, f, h}});
        g.edge_orders[edge_index(4, e.first, e.second)] = {e.first, 4, e.second};
        g.edge_orders[edge_index(4, f.first, f.second)] = {f.first, 4, f.second};
        if (euler_characteristic(embed(pi, g)) == 2)
          fits.emplace_back(QuadrupleClass{QuadrupleClass::Kind::Crossing, static_cast<Pairing>(p), h}, g);
      }
    if (fits.size() > 1) throw CatalogError("4-element system with several planarizations");
    if (fits.empty()) continue;
    auto& entry = table[code];
    entry.drawable = true;
    entry.cls = fits[0].first;
    const auto& g = fits[0].second;
    const auto left = vertices_left_of(faces_of(pi, g), expand_walk(g, {0, 1, 2}));
    entry.d_in_abc = std::find(left.begin(), left.end(), 3) != left.end();
  }
  return table;
}

const QuadrupleTable& quadruple_table() {
  static const QuadrupleTable table = derive_quadruple_table();
  return table;
}

QuadrupleClass classify_quadruple(const PreRotationSystem& pi, Vertex a, Vertex b, Vertex c, Vertex d) {
  const auto& entry = quadruple_table()[quadruple_code(pi, a, b, c, d)];
  if (!entry.drawable)
    throw NotDrawable("vertices " + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                      std::to_string(c + 1) + "," + std::to_string(d + 1) + " induce the 4-element obstruction");
  return entry.cls;
}

CrossingMap crossing_map(const PreRotationSystem& pi) {
  CrossingMap map(pi.size());
  for_each_subset(pi.size(), 4, [&](const std::vector<int>& s) {
    const auto cls = classify_quadruple(pi, s[0], s[1], s[2], s[3]);
    if (!cls.crossing()) return;
    auto [e, f] = pairing_edges(cls.pairing, s.data());
    map.add(e, f, cls.direction);
  });
  return map;
}

bool side_contains(const PreRotationSystem& pi, Vertex d, Vertex a, Vertex b, Vertex c) {
  const auto& entry = quadruple_table()[quadruple_code(pi, a, b, c, d)];
  if (!entry.drawable) throw NotDrawable("side query on the 4-element obstruction");
  return entry.d_in_abc;
}

const PreRotationSystem& ObstructionCatalog::need(const std::optional<PreRotationSystem>& entry,
                                                  const char* name) {
  if (!entry) throw CatalogError(std::string("catalog entry ") + name + " is missing");
  return *entry;
}

namespace {

nlohmann::json rows_json(const PreRotationSystem& pi) {
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < pi.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Vertex b : pi.rotation(a)) row.push_back(b + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

PreRotationSystem rows_from_json(const nlohmann::json& j) {
  std::vector<std::vector<Vertex>> rows;
  for (const auto& row : j) {
    std::vector<Vertex> r;
    for (const auto& v : row) r.push_back(v.get<int>() - 1);
    rows.push_back(std::move(r));
  }
  return PreRotationSystem(rows);
}

const char* const kEntryNames[] = {"pi4o", "pi5a", "pi5b", "conv5a", "conv5b", "hconv6", "gt_allowed5"};

template <class Cat>
auto entries(Cat& c) {
  return std::array{&c.pi4o, &c.pi5a, &c.pi5b, &c.conv5a, &c.conv5b, &c.hconv6, &c.gt_allowed5};
}

}  // namespace

std::string ObstructionCatalog::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = 1;
  auto list = entries(*this);
  for (std::size_t i = 0; i < list.size(); ++i)
    if (*list[i]) j[kEntryNames[i]] = rows_json(**list[i]);
  if (!drawable5.empty()) {
    j["drawable5"] = nlohmann::ordered_json::array();
    for (const auto& d : drawable5) j["drawable5"].push_back(nlohmann::ordered_json(rows_json(d)));
  }
  nlohmann::ordered_json quads = nlohmann::ordered_json::array();
  for (int code = 0; code < 16; ++code) {
    const auto& q = quadruples[code];
    nlohmann::ordered_json e;
    e["code"] = code;
    e["drawable"] = q.drawable;
    if (q.drawable) {
      e["crossing"] = q.cls.crossing();
      if (q.cls.crossing()) {
        e["pairing"] = static_cast<int>(q.cls.pairing);
        e["direction"] = q.cls.direction;
      }
      e["d_in_abc"] = q.d_in_abc;
    }
    quads.push_back(std::move(e));
  }
  j["quadruples"] = std::move(quads);
  return j.dump(1);
}

ObstructionCatalog ObstructionCatalog::from_json(std::string_view text) {
  ObstructionCatalog c;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("malformed catalog: ") + e.what());
  }
  auto list = entries(c);
  for (std::size_t i = 0; i < list.size(); ++i)
    if (j.contains(kEntryNames[i])) *list[i] = rows_from_json(j[kEntryNames[i]]);
  if (j.contains("drawable5"))
    for (const auto& d : j["drawable5"]) c.drawable5.push_back(rows_from_json(d));
  if (j.contains("quadruples")) {
    for (const auto& e : j["quadruples"]) {
      auto& q = c.quadruples.at(e["code"].get<int>());
      q.drawable = e["drawable"].get<bool>();
      if (!q.drawable) continue;
      if (e.value("crossing", false)) {
        q.cls.kind = QuadrupleClass::Kind::Crossing;
        q.cls.pairing = static_cast<Pairing>(e["pairing"].get<int>());
        q.cls.direction = e["direction"].get<int>();
      }
      q.d_in_abc = e.value("d_in_abc", false);
    }
  }
  return c;
}

bool builtin_catalog_available() { return kBuiltinCatalogJson[0] != '\0'; }

const ObstructionCatalog& builtin_catalog() {
  static const ObstructionCatalog catalog = [] {
    if (!builtin_catalog_available()) {
      ObstructionCatalog c;
      c.quadruples = quadruple_table();
      return c;
    }
    return ObstructionCatalog::from_json(kBuiltinCatalogJson);
  }();
  return catalog;
}

const char* to_string(DrawingClass cls) {
  switch (cls) {
    case DrawingClass::Drawable:
      return "drawable";
    case DrawingClass::Convex:
      return "convex";
    case DrawingClass::HConvex:
      return "hconvex";
    case DrawingClass::GenTwisted:
      return "gentwisted";
  }
  return "?";
}

std::vector<std::vector<Vertex>> labeled_copies(const std::vector<PreRotationSystem>& systems) {
  std::set<std::vector<Vertex>> out;
  for (const auto& s : systems)
    for (const auto& r : all_relabelings(s)) out.insert(r.flat());
  return {out.begin(), out.end()};
}

namespace {

bool any_subset_in(const PreRotationSystem& pi, int k, const std::set<std::vector<Vertex>>& forbidden) {
  if (pi.size() < k || forbidden.empty()) return false;
  bool hit = false;
  for_each_subset(pi.size(), k, [&](const std::vector<int>& s) {
    if (!hit && forbidden.count(restrict_to(pi, s).flat())) hit = true;
  });
  return hit;
}

const std::set<std::vector<Vertex>>& copies_of(std::initializer_list<const PreRotationSystem*> systems) {
  static std::mutex mu;
  static std::map<std::vector<Vertex>, std::set<std::vector<Vertex>>> cache;
  std::vector<Vertex> key;
  std::vector<PreRotationSystem> v;
  for (auto* s : systems) {
    v.push_back(*s);
    key.push_back(-1);
    key.insert(key.end(), s->flat().begin(), s->flat().end());
  }
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto c = labeled_copies(v);
    it = cache.emplace(key, std::set<std::vector<Vertex>>(c.begin(), c.end())).first;
  }
  return it->second;
}

}  // namespace

bool check_class(const PreRotationSystem& pi, DrawingClass cls, const ObstructionCatalog& catalog) {
  using C = ObstructionCatalog;
  const int n = pi.size();
  if (cls == DrawingClass::GenTwisted && n < 7)
    throw OutOfScope("the 5-element characterization of generalized twisted systems needs n >= 7");

  bool ok = true;
  for_each_subset(n, 4, [&](const std::vector<int>& s) {
    if (ok && !catalog.quadruples[quadruple_code(pi, s[0], s[1], s[2], s[3])].drawable) ok = false;
  });
  if (!ok) return false;
  if (any_subset_in(pi, 5, copies_of({&C::need(catalog.pi5a, "pi5a"), &C::need(catalog.pi5b, "pi5b")})))
    return false;
  if (cls == DrawingClass::Drawable) return true;

  if (cls == DrawingClass::GenTwisted) {
    const auto allowed = canonical_form(C::need(catalog.gt_allowed5, "gt_allowed5"));
    bool all = true;
    for_each_subset(n, 5, [&](const std::vector<int>& s) {
      if (all && canonical_form(restrict_to(pi, s)) != allowed) all = false;
    });
    return all;
  }
  if (any_subset_in(pi, 5,
                    copies_of({&C::need(catalog.conv5a, "conv5a"), &C::need(catalog.conv5b, "conv5b")})))
    return false;
  if (cls == DrawingClass::Convex) return true;
  return !any_subset_in(pi, 6, copies_of({&C::need(catalog.hconv6, "hconv6")}));
}

}  // namespace rotsys
