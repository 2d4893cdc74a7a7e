#include "geodkit/report.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "geodkit/paths.hpp"
#include "geodkit/structure.hpp"

namespace geodkit {

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json to_json(const Witness& w) {
  Json out = Json::object();
  if (const auto* g = std::get_if<GeodesicWitness>(&w)) {
    out["source"] = g->source;
    out["target"] = g->target;
    if (g->predecessors) {
      out["predecessors"] = {(*g->predecessors)[0], (*g->predecessors)[1]};
    }
  } else if (const auto* a = std::get_if<AntipodeWitness>(&w)) {
    out["vertex"] = a->vertex;
    out["antipodes"] = a->antipodes;
  } else {
    out["vertices"] = std::get<SubgraphWitness>(w).vertices;
  }
  return out;
}

Json check_document(const Graph& g, const Verdict& geodetic, const Verdict& antipodal) {
  Json doc;
  doc["n"] = g.order();
  doc["m"] = g.size();
  doc["diameter"] = to_json(diameter(g));
  doc["geodetic"] = geodetic.holds;
  doc["antipodal"] = antipodal.holds;
  if (geodetic.witness) {
    doc["witness_geodetic"] = to_json(*geodetic.witness);
  }
  if (antipodal.witness) {
    doc["witness_antipodal"] = to_json(*antipodal.witness);
  }
  return doc;
}

namespace {

Json class_json(const ClassVerdict& v) {
  Json out;
  out["member"] = v.member;
  Json shapes = Json::array();
  for (auto s : v.block_shapes) {
    shapes.push_back(to_string(s));
  }
  out["block_shapes"] = shapes;
  if (!v.member) {
    out["reason"] = v.reason;
    out["witness"] = v.witness;
  }
  return out;
}

Json even_json(const std::optional<EvenStructure>& s) {
  if (!s) {
    return nullptr;
  }
  return Json{{"kind", to_string(s->kind)}, {"vertices", s->vertices}};
}

}  // namespace

Json analyze_document(const Graph& g, Vertex root) {
  if (g.is_weighted()) {
    throw InputError("analyze: weighted input is not supported");
  }
  require_connected(g, "analyze");
  const auto bd = block_decomposition(g);
  Json doc;
  doc["n"] = g.order();
  doc["m"] = g.size();
  doc["diameter"] = to_json(diameter(g));
  doc["geodetic"] = geodetic_via_blocks(g).holds;
  doc["cut_vertices"] = bd.cut_vertices;
  doc["blocks"] = bd.blocks;
  doc["floor_geodetic"] = class_json(in_floor_geodetic(g));
  doc["claw_free_geodetic"] = class_json(claw_free_geodetic_characterization(g));
  doc["induced_C4_or_K4e"] = even_json(has_induced_C4_or_K4e(g));
  if (g.order() <= kEvenSearchMaxOrder) {
    doc["forbidden_even_structure"] = even_json(search_forbidden_even_structure(g));
  } else {
    doc["forbidden_even_structure"] = "skipped";
  }
  doc["locally_connected"] = is_locally_connected(g);
  if (is_tree(g)) {
    const auto v = tree_antipodal_criterion(g);
    doc["tree_antipodal"] = v.holds;
  }
  doc["antipode_counts"] = antipode_counts(g);

  const auto tr = verify_transversal_blocks(g, root);
  Json t;
  t["root"] = tr.root;
  t["applicable"] = tr.applicable;
  Json stems = Json::array();
  for (const auto& s : tr.stems) {
    stems.push_back(s.vertices);
  }
  t["stems"] = stems;
  Json blocks = Json::array();
  for (const auto& b : tr.blocks) {
    Json jb;
    jb["vertices"] = b.vertices;
    jb["role"] = to_string(b.role);
    if (b.role == BlockRole::transversal) {
      jb["stems"] = b.stems;
      jb["n"] = b.n;
      jb["k"] = b.k;
      jb["l"] = b.l;
    }
    blocks.push_back(jb);
  }
  t["blocks"] = blocks;
  t["all_transversal"] = tr.all_transversal();
  doc["transversality"] = t;
  return doc;
}

std::string render_text(const Json& doc) {
  std::size_t width = 0;
  for (const auto& item : doc.items()) {
    width = std::max(width, item.key().size());
  }
  std::string out;
  for (const auto& item : doc.items()) {
    out += item.key();
    out.append(width + 2 - item.key().size(), ' ');
    const Json& v = item.value();
    out += v.is_string() ? v.get<std::string>() : v.dump();
    out += '\n';
  }
  return out;
}

}  // namespace geodkit
