#include "nhm/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nhm/error.hpp"

namespace nhm {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const char* what) {
  if (!obj.is_object()) throw parse_error(std::string(what) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) throw parse_error("unknown key '" + key + "' in " + what);
  }
}

const json& field(const json& obj, const char* key, const char* what) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw parse_error(std::string("missing key '") + key + "' in " + what);
  return *it;
}

Rational to_rational(const json& v, const char* what) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw parse_error(std::string(what) + " must be an exact number string");
}

ExtRat to_extrat(const json& v, const char* what) {
  if (v.is_number_integer()) return ExtRat(v.get<long>());
  if (v.is_string()) return ExtRat::parse(v.get<std::string>());
  throw parse_error(std::string(what) + " must be an exact number string");
}

bool to_flag(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) return false;
  if (!it->is_boolean()) throw parse_error(std::string(key) + " must be a boolean");
  return it->get<bool>();
}

std::string to_id(const json& v, const char* what) {
  if (!v.is_string() || v.get<std::string>().empty())
    throw parse_error(std::string(what) + " must be a nonempty string");
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const char* what) {
  const json& v = field(obj, key, what);
  if (!v.is_array()) throw parse_error(std::string(key) + " must be an array");
  return v;
}

json optional_array(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) return json::array();
  if (!it->is_array()) throw parse_error(std::string(key) + " must be an array");
  return *it;
}

IntervalSet to_open_domain(const json& v) {
  if (!v.is_array()) throw parse_error("domain must be an array of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const json& pair : v) {
    if (!pair.is_array() || pair.size() != 2)
      throw parse_error("domain entries must be [lo, hi] pairs");
    parts.push_back(
        Interval::open(to_extrat(pair[0], "domain lo"), to_extrat(pair[1], "domain hi")));
  }
  return IntervalSet::of(std::move(parts));
}

json from_open_domain(const IntervalSet& s) {
  json out = json::array();
  for (const Interval& part : s.parts())
    out.push_back(json::array({part.lo().str(), part.hi().str()}));
  return out;
}

PointRef to_pointref(const json& v) {
  require_keys(v, {"chart", "param"}, "point");
  return {to_id(field(v, "chart", "point"), "chart"),
          to_rational(field(v, "param", "point"), "param")};
}

json from_pointref(const PointRef& p) {
  return json{{"chart", p.chart}, {"param", rational_str(p.param)}};
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  json doc = parse_json(text);
  require_keys(doc, {"charts", "gluings"}, "presentation");

  std::vector<Chart> charts;
  for (const json& c : optional_array(doc, "charts")) {
    require_keys(c, {"id", "lo", "hi", "lo_closed", "hi_closed"}, "chart");
    charts.push_back({to_id(field(c, "id", "chart"), "chart id"),
                      Interval::make(to_extrat(field(c, "lo", "chart"), "lo"),
                                     to_extrat(field(c, "hi", "chart"), "hi"),
                                     to_flag(c, "lo_closed"), to_flag(c, "hi_closed"))});
  }

  std::vector<GluingGenerator> gluings;
  for (const json& g : optional_array(doc, "gluings")) {
    require_keys(g, {"from", "to", "slope", "offset", "domain"}, "gluing");
    gluings.push_back({to_id(field(g, "from", "gluing"), "from"),
                       to_id(field(g, "to", "gluing"), "to"),
                       PartialAffine(to_rational(field(g, "slope", "gluing"), "slope"),
                                     to_rational(field(g, "offset", "gluing"), "offset"),
                                     to_open_domain(field(g, "domain", "gluing")))});
  }
  return Presentation(std::move(charts), std::move(gluings));
}

std::string emit_presentation(const Presentation& p) {
  json doc;
  doc["charts"] = json::array();
  for (const Chart& c : p.charts())
    doc["charts"].push_back(json{{"id", c.id},
                                 {"lo", c.extent.lo().str()},
                                 {"hi", c.extent.hi().str()},
                                 {"lo_closed", c.extent.lo_closed()},
                                 {"hi_closed", c.extent.hi_closed()}});
  doc["gluings"] = json::array();
  for (const GluingGenerator& g : p.gluings())
    doc["gluings"].push_back(json{{"from", g.from},
                                  {"to", g.to},
                                  {"slope", rational_str(g.map.slope())},
                                  {"offset", rational_str(g.map.offset())},
                                  {"domain", from_open_domain(g.map.domain())}});
  return doc.dump(2) + "\n";
}

ObstacleSet parse_obstacles(const std::string& text) {
  json doc = parse_json(text);
  require_keys(doc, {"points", "vsegments"}, "obstacle set");

  ObstacleSet q;
  for (const json& pt : optional_array(doc, "points")) {
    if (!pt.is_array() || pt.size() != 2)
      throw parse_error("points entries must be [x, y] pairs");
    q.points.emplace_back(to_rational(pt[0], "point x"), to_rational(pt[1], "point y"));
  }
  for (const json& s : optional_array(doc, "vsegments")) {
    require_keys(s, {"x", "ylo", "yhi"}, "vsegment");
    q.vsegments.push_back({to_rational(field(s, "x", "vsegment"), "x"),
                           to_extrat(field(s, "ylo", "vsegment"), "ylo"),
                           to_extrat(field(s, "yhi", "vsegment"), "yhi")});
  }
  validate(q);
  return q;
}

std::string emit_obstacles(const ObstacleSet& q) {
  json doc;
  doc["points"] = json::array();
  for (const auto& [x, y] : q.points)
    doc["points"].push_back(json::array({rational_str(x), rational_str(y)}));
  doc["vsegments"] = json::array();
  for (const VSegment& s : q.vsegments)
    doc["vsegments"].push_back(
        json{{"x", rational_str(s.x)}, {"ylo", s.ylo.str()}, {"yhi", s.yhi.str()}});
  return doc.dump(2) + "\n";
}

namespace {

json from_piece(const Piece& piece) {
  return json{{"chart", piece.chart},
              {"span", json::array({piece.span.lo().str(), piece.span.hi().str()})}};
}

Piece to_piece(const json& v) {
  require_keys(v, {"chart", "span"}, "piece");
  const json& span = field(v, "span", "piece");
  if (!span.is_array() || span.size() != 2)
    throw parse_error("piece span must be [lo, hi]");
  return {to_id(field(v, "chart", "piece"), "chart"),
          Interval::open(to_extrat(span[0], "span lo"), to_extrat(span[1], "span hi"))};
}

json from_end(const EdgeEnd& end) { return end.open() ? json("open") : json(end.vertex); }

json from_limits(const EdgeEnd& end) {
  json out = json::array();
  for (const PointRef& p : end.limit_points) out.push_back(from_pointref(p));
  return out;
}

EdgeEnd to_end(const json& attachment, const json& limits) {
  EdgeEnd end;
  std::string a = to_id(attachment, "edge end");
  if (a != "open") end.vertex = a;
  for (const json& p : limits) end.limit_points.push_back(to_pointref(p));
  return end;
}

}  // namespace

QuotientGraph parse_quotient(const std::string& text) {
  json doc = parse_json(text);
  require_keys(doc, {"components"}, "quotient graph");

  QuotientGraph qg;
  for (const json& c : optional_array(doc, "components")) {
    require_keys(c, {"kind", "charts", "vertices", "edges"}, "component");
    QuotientComponent comp;
    std::string kind = to_id(field(c, "kind", "component"), "kind");
    if (kind != "graph" && kind != "circle")
      throw parse_error("component kind must be \"graph\" or \"circle\"");
    comp.circle = kind == "circle";
    for (const json& id : array_field(c, "charts", "component"))
      comp.charts.push_back(to_id(id, "chart id"));
    for (const json& v : optional_array(c, "vertices")) {
      require_keys(v, {"id", "members"}, "vertex");
      QuotientVertex vertex{to_id(field(v, "id", "vertex"), "vertex id"), {}};
      for (const json& m : array_field(v, "members", "vertex"))
        vertex.members.push_back(to_pointref(m));
      comp.vertices.push_back(std::move(vertex));
    }
    for (const json& e : optional_array(c, "edges")) {
      require_keys(e, {"id", "pieces", "chain", "ends", "limits"}, "edge");
      QuotientEdge edge;
      edge.id = to_id(field(e, "id", "edge"), "edge id");
      for (const json& piece : array_field(e, "pieces", "edge"))
        edge.pieces.push_back(to_piece(piece));
      for (const json& piece : array_field(e, "chain", "edge"))
        edge.chain.push_back(to_piece(piece));
      const json& ends = array_field(e, "ends", "edge");
      const json& limits = array_field(e, "limits", "edge");
      if (ends.size() != 2 || limits.size() != 2)
        throw parse_error("edge ends and limits must each have two entries");
      edge.end0 = to_end(ends[0], limits[0]);
      edge.end1 = to_end(ends[1], limits[1]);
      comp.edges.push_back(std::move(edge));
    }
    qg.components.push_back(std::move(comp));
  }
  return qg;
}

std::string emit_quotient(const QuotientGraph& qg) {
  json doc;
  doc["components"] = json::array();
  for (const QuotientComponent& comp : qg.components) {
    json c;
    c["kind"] = comp.circle ? "circle" : "graph";
    c["charts"] = comp.charts;
    c["vertices"] = json::array();
    for (const QuotientVertex& v : comp.vertices) {
      json members = json::array();
      for (const PointRef& m : v.members) members.push_back(from_pointref(m));
      c["vertices"].push_back(json{{"id", v.id}, {"members", members}});
    }
    c["edges"] = json::array();
    for (const QuotientEdge& e : comp.edges) {
      json pieces = json::array(), chain = json::array();
      for (const Piece& piece : e.pieces) pieces.push_back(from_piece(piece));
      for (const Piece& piece : e.chain) chain.push_back(from_piece(piece));
      c["edges"].push_back(
          json{{"id", e.id},
               {"pieces", pieces},
               {"chain", chain},
               {"ends", json::array({from_end(e.end0), from_end(e.end1)})},
               {"limits", json::array({from_limits(e.end0), from_limits(e.end1)})}});
    }
    doc["components"].push_back(std::move(c));
  }
  return doc.dump(2) + "\n";
}

std::string emit_quotient_dot(const QuotientGraph& qg) {
  std::ostringstream out;
  out << "graph quotient {\n";
  int open_no = 0, circle_no = 0;
  for (const QuotientComponent& comp : qg.components) {
    if (comp.circle) {
      out << "  \"circle" << ++circle_no << "\" [shape=doublecircle, label=\"circle\"];\n";
      continue;
    }
    for (const QuotientVertex& v : comp.vertices)
      out << "  \"" << v.id << "\" [shape=circle, label=\"" << v.id << "\"];\n";
    for (const QuotientEdge& e : comp.edges) {
      auto node = [&](const EdgeEnd& end) {
        if (!end.open()) return "\"" + end.vertex + "\"";
        std::string id = "open" + std::to_string(++open_no);
        out << "  \"" << id << "\" [shape=point, label=\"open\"];\n";
        return "\"" + id + "\"";
      };
      std::string n0 = node(e.end0);
      std::string n1 = node(e.end1);
      out << "  " << n0 << " -- " << n1 << " [label=\"" << e.id << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open output file '" + path + "'");
  out << content;
}

}  // namespace nhm
