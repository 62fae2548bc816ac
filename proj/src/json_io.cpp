#include "schreier/json_io.hpp"

#include <sstream>

namespace schreier {

Json graph_to_json(const LabelledDigraph& g) {
  Json j;
  j["signature"] = Json::array();
  for (Order p : g.signature().orders()) {
    if (is_finite(p))
      j["signature"].push_back(p);
    else
      j["signature"].push_back("inf");
  }
  j["labels"] = g.signature().label_names();
  j["n"] = g.vertex_count();
  j["succ"] = Json::array();
  for (Label l = 0; l < g.label_count(); ++l) {
    Json col = Json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      Vertex w = g.succ(l, v);
      if (w == kNoVertex)
        col.push_back(nullptr);
      else
        col.push_back(w);
    }
    j["succ"].push_back(std::move(col));
  }
  if (g.basepoint())
    j["basepoint"] = *g.basepoint();
  else
    j["basepoint"] = nullptr;
  j["dangling"] = Json::array();
  for (const DanglingVertex& d : g.danglers()) {
    Json rec;
    rec["v"] = d.vertex;
    rec["colours"] = Json::array();
    for (Label l = 0; l < g.label_count(); ++l)
      if ((d.colours >> l) & 1)
        rec["colours"].push_back(g.signature().label_name(l));
    j["dangling"].push_back(std::move(rec));
  }
  return j;
}

LabelledDigraph graph_from_json(const Json& j) {
  try {
    std::vector<Order> orders;
    for (const auto& o : j.at("signature")) {
      if (o.is_string() && o.get<std::string>() == "inf")
        orders.push_back(kInfiniteOrder);
      else
        orders.push_back(o.get<Order>());
    }
    std::vector<std::string> labels =
        j.at("labels").get<std::vector<std::string>>();
    FreeProductSignature sig(orders, labels);

    const Vertex n = j.at("n").get<Vertex>();
    LabelledDigraph g(sig, n);
    const auto& succ = j.at("succ");
    if (succ.size() != sig.size())
      throw DomainError("graph json: succ column count mismatch");
    for (Label l = 0; l < sig.size(); ++l) {
      if (succ[l].size() != n)
        throw DomainError("graph json: succ column length mismatch");
      for (Vertex v = 0; v < n; ++v)
        if (!succ[l][v].is_null()) g.set_edge(l, v, succ[l][v].get<Vertex>());
    }
    if (j.contains("basepoint") && !j.at("basepoint").is_null())
      g.set_basepoint(j.at("basepoint").get<Vertex>());
    if (j.contains("dangling")) {
      for (const auto& rec : j.at("dangling")) {
        LabelSet colours = 0;
        for (const auto& name : rec.at("colours")) {
          bool found = false;
          for (Label l = 0; l < sig.size(); ++l)
            if (sig.label_name(l) == name.get<std::string>()) {
              colours |= LabelSet{1} << l;
              found = true;
            }
          if (!found) throw DomainError("graph json: unknown colour label");
        }
        g.add_dangler({rec.at("v").get<Vertex>(), colours});
      }
    }
    return g;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("graph json: ") + e.what());
  }
}

FiniteGroup group_from_json(const Json& j) {
  try {
    if (j.contains("preset"))
      return FiniteGroup::preset(j.at("preset").get<std::string>());
    if (j.contains("perms")) {
      std::vector<Perm> perms;
      for (const auto& p : j.at("perms")) perms.push_back(p.get<Perm>());
      return FiniteGroup::from_permutations(perms);
    }
    if (j.contains("table")) {
      auto table = j.at("table").get<std::vector<std::vector<unsigned>>>();
      std::vector<GroupGenerator> gens;
      unsigned i = 0;
      for (const auto& e : j.at("generators"))
        gens.push_back({e.get<unsigned>(), "g" + std::to_string(++i)});
      return FiniteGroup::from_table(std::move(table), std::move(gens));
    }
    throw DomainError("group json: expected perms, table or preset");
  } catch (const Json::exception& e) {
    throw DomainError(std::string("group json: ") + e.what());
  }
}

Json realization_to_json(const Realization& r) {
  Json j = graph_to_json(r.schreier);
  Json cert;
  cert["group"] = describe_group(r.group);
  cert["group_order"] = r.group.order();
  cert["product"] = r.signature.to_string();
  cert["index"] = r.schreier.vertex_count();
  cert["aut_order"] = r.aut.order();
  cert["edge_links"] = r.certificate.edge_links_used;
  cert["v_gamma"] = r.certificate.v_gamma;
  cert["fast"] = r.certificate.fast;
  cert["checks"] = Json::array();
  for (const auto& c : r.certificate.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["ms"] = c.ms;
    cert["checks"].push_back(std::move(e));
  }
  cert["notes"] = r.certificate.notes;
  j["certificate"] = std::move(cert);
  return j;
}

namespace {

Json perm_json(const Perm& p) { return Json(p); }

}  // namespace

Json object_to_json(const Hypermap& h) {
  Json j;
  j["kind"] = h.is_map ? "map" : "hypermap";
  j["n"] = h.darts;
  j["perms"]["R"] = perm_json(h.R);
  j["perms"]["L"] = perm_json(h.L);
  auto eg = euler_genus(h);
  j["chi"] = eg.chi;
  if (eg.genus)
    j["genus"] = *eg.genus;
  else
    j["genus"] = nullptr;
  return j;
}

Json object_to_json(const Paving& p) {
  Json j;
  j["kind"] = "paving";
  j["n"] = p.darts;
  j["perms"]["R"] = perm_json(p.R);
  j["perms"]["L"] = perm_json(p.L);
  j["perms"]["V"] = perm_json(p.V);
  return j;
}

Json object_to_json(const Constellation& c) {
  Json j;
  j["kind"] = "constellation";
  j["n"] = c.darts;
  j["k"] = c.g.size();
  j["perms"] = Json::object();
  for (std::size_t i = 0; i < c.g.size(); ++i)
    j["perms"]["g" + std::to_string(i + 1)] = perm_json(c.g[i]);
  j["passport"] = passport(c);
  return j;
}


AnyObject object_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const Vertex n = j.at("n").get<Vertex>();
    const auto& perms = j.at("perms");
    auto get = [&](const char* name) { return perms.at(name).get<Perm>(); };
    if (kind == "hypermap" || kind == "map") {
      Hypermap h{n, get("R"), get("L"), kind == "map"};
      if (!hypermap_valid(h)) throw DomainError("object json: invalid hypermap");
      return h;
    }
    if (kind == "paving") {
      Paving p{n, get("R"), get("L"), get("V")};
      if (!paving_valid(p)) throw DomainError("object json: invalid paving");
      return p;
    }
    if (kind == "constellation") {
      Constellation c{n, {}};
      for (std::size_t i = 1; i <= perms.size(); ++i)
        c.g.push_back(get(("g" + std::to_string(i)).c_str()));
      if (!constellation_valid(c))
        throw DomainError("object json: invalid constellation");
      return c;
    }
    throw DomainError("object json: unknown kind " + kind);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("object json: ") + e.what());
  }
}

std::string to_dot(const LabelledDigraph& g) {
  static const char* kPalette[] = {"red",    "cyan",   "green", "blue",
                                   "orange", "purple", "brown", "magenta"};
  auto colour_of = [&](Label l) -> std::string {
    const std::string& name = g.signature().label_name(l);
    if (name == "r") return "red";
    if (name == "c") return "cyan";
    if (name == "g") return "green";
    if (name == "b") return "blue";
    return kPalette[l % 8];
  };

  std::ostringstream out;
  out << "digraph schreier {\n";
  if (g.basepoint())
    out << "  " << *g.basepoint() << " [shape=doublecircle];\n";
  for (const DanglingVertex& d : g.danglers())
    out << "  " << d.vertex << " [shape=square];\n";
  for (Label l = 0; l < g.label_count(); ++l) {
    const bool involution = g.signature().order(l) == 2;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      Vertex w = g.succ(l, v);
      if (w == kNoVertex) continue;
      if (involution && w < v && g.succ(l, w) == v) continue;  // drawn once
      out << "  " << v << " -> " << w << " [color=" << colour_of(l)
          << ", label=\"" << g.signature().label_name(l) << "\"";
      if (involution && g.succ(l, w) == v) out << ", dir=none";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string digest_without_timings(const Json& payload) {
  Json copy = payload;
  if (copy.contains("certificate") && copy["certificate"].contains("checks"))
    for (auto& c : copy["certificate"]["checks"]) c.erase("ms");
  return fnv1a_hex(copy.dump());
}

}  // namespace schreier
