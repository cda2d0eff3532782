#include "cuspidal/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace cusp {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

json parse(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), what + ": not valid JSON");
  return j;
}

json root_json(const RootVector& v) {
  json arr = json::array();
  for (int i = 0; i < v.e(); ++i) arr.push_back(v[i]);
  return arr;
}

RootVector root_from(const json& j, int e, const std::string& path) {
  require(j.is_array(), path + ": expected an array of coefficients");
  require(static_cast<int>(j.size()) == e,
          path + ": expected " + std::to_string(e) + " coefficients");
  std::vector<Int> coeffs;
  for (const auto& c : j) {
    require(c.is_number_integer() && c.get<Int>() >= 0,
            path + ": coefficients must be nonnegative integers");
    coeffs.push_back(c.get<Int>());
  }
  return RootVector(e, coeffs);
}

json shape_json(const Shape& s) {
  json nodes = json::array();
  for (Node u : s.nodes()) nodes.push_back(json::array({u.row, u.col}));
  return json{{"nodes", nodes}};
}

Shape shape_from(const json& j, const std::string& path) {
  require(j.is_object(), path + ": expected an object");
  if (j.contains("nodes")) {
    const json& arr = j.at("nodes");
    require(arr.is_array(), path + ".nodes: expected an array");
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& p = arr[i];
      require(p.is_array() && p.size() == 2 && p[0].is_number_integer() &&
                  p[1].is_number_integer(),
              path + ".nodes[" + std::to_string(i) + "]: expected [row, col]");
      nodes.push_back(Node{p[0].get<int>(), p[1].get<int>()});
    }
    return Shape(std::move(nodes));
  }
  if (j.contains("skew")) {
    const json& sk = j.at("skew");
    require(sk.is_object() && sk.contains("lambda"),
            path + ".skew: expected {\"lambda\": [...], ...}");
    auto read_parts = [&](const char* key) {
      std::vector<Int> parts;
      if (!sk.contains(key)) return parts;
      const json& arr = sk.at(key);
      require(arr.is_array(), path + ".skew." + key + ": expected an array");
      for (const auto& p : arr) {
        require(p.is_number_integer(),
                path + ".skew." + key + ": parts must be integers");
        parts.push_back(p.get<Int>());
      }
      return parts;
    };
    int charge = 0;
    if (sk.contains("charge")) {
      require(sk.at("charge").is_number_integer(),
              path + ".skew.charge: expected an integer");
      charge = sk.at("charge").get<int>();
    }
    return from_skew_partition(read_parts("lambda"), read_parts("mu"),
                               charge);
  }
  throw std::invalid_argument(path + ": expected \"nodes\" or \"skew\"");
}

json preorder_json(const ConvexPreorder& pre) {
  if (pre.is_reversed())
    return json{{"reverse", preorder_json(pre.reversed())}};
  if (!pre.preset_name().empty())
    return json{{"e", pre.e()}, {"preset", pre.preset_name()}};
  json h = json::array();
  for (const auto& [x, y] : pre.h_assignment())
    h.push_back(json::array({x, y}));
  return json{{"e", pre.e()}, {"h", h}};
}

ConvexPreorder preorder_from(const json& j, const std::string& path) {
  require(j.is_object(), path + ": expected an object");
  if (j.contains("reverse"))
    return preorder_from(j.at("reverse"), path + ".reverse").reversed();
  if (j.contains("preset")) {
    require(j.at("preset").is_string(),
            path + ".preset: expected a string");
    return ConvexPreorder::preset(j.at("preset").get<std::string>());
  }
  require(j.contains("e") && j.at("e").is_number_integer(),
          path + ": expected \"e\"");
  int e = j.at("e").get<int>();
  require(j.contains("h") && j.at("h").is_array(),
          path + ": expected \"h\" (or \"preset\")");
  std::vector<std::array<Int, 2>> h;
  for (std::size_t i = 0; i < j.at("h").size(); ++i) {
    const json& p = j.at("h")[i];
    require(p.is_array() && p.size() == 2 && p[0].is_number_integer() &&
                p[1].is_number_integer(),
            path + ".h[" + std::to_string(i) + "]: expected [x, y]");
    h.push_back({p[0].get<Int>(), p[1].get<Int>()});
  }
  return ConvexPreorder::functional(e, h);
}

json kostant_json(const KostantPartition& k, const ConvexPreorder& pre) {
  json arr = json::array();
  for (const auto& [root, mult] : k.sorted_entries(pre))
    arr.push_back(json{{"root", root_json(root)}, {"mult", mult}});
  return arr;
}

}  // namespace

std::string root_to_json(const RootVector& v) { return root_json(v).dump(); }

RootVector root_from_json(const std::string& text, int e) {
  return root_from(parse(text, "root"), e, "root");
}

std::string kostant_to_json(const KostantPartition& k,
                            const ConvexPreorder& pre) {
  return kostant_json(k, pre).dump();
}

std::string shape_to_json(const Shape& s) { return shape_json(s).dump(); }

Shape shape_from_json(const std::string& text) {
  return shape_from(parse(text, "shape"), "shape");
}

std::string preorder_to_json(const ConvexPreorder& pre) {
  return preorder_json(pre).dump();
}

ConvexPreorder preorder_from_json(const std::string& text) {
  return preorder_from(parse(text, "preorder"), "preorder");
}

std::string tiling_to_json(const GammaTiling& g, const ConvexPreorder& pre) {
  json tiles = json::array(), contents = json::array();
  for (const Shape& tile : g.tiles) tiles.push_back(shape_json(tile));
  for (const RootVector& c : g.contents) contents.push_back(root_json(c));
  return json{{"tiles", tiles},
              {"contents", contents},
              {"kostant", kostant_json(g.partition, pre)}}
      .dump();
}

std::string components_to_json(
    const std::vector<std::pair<Shape, int>>& components) {
  json arr = json::array();
  for (const auto& [shape, color] : components)
    arr.push_back(json{{"shape", shape_json(shape)}, {"color", color}});
  return arr.dump();
}

std::vector<std::pair<Shape, int>> components_from_json(
    const std::string& text) {
  json j = parse(text, "components");
  require(j.is_array(), "components: expected an array");
  std::vector<std::pair<Shape, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "components[" + std::to_string(i) + "]";
    const json& c = j[i];
    require(c.is_object() && c.contains("shape") && c.contains("color") &&
                c.at("color").is_number_integer(),
            path + ": expected {\"shape\": ..., \"color\": t}");
    out.emplace_back(shape_from(c.at("shape"), path + ".shape"),
                     c.at("color").get<int>());
  }
  return out;
}

}  // namespace cusp
