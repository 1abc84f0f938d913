#include "ramseyforge/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ramseyforge/errors.hpp"

namespace rf {
namespace {

struct RawEntry {
  std::vector<uint64_t> elements;
  uint16_t color;
};

ColoringTable build_table(const std::vector<RawEntry>& entries, bool subsets) {
  if (entries.empty()) throw parse_error("coloring has no entries");
  uint64_t max_elem = 0;
  uint16_t max_color = 0;
  size_t arity = entries.front().elements.size();
  bool uniform = true;
  for (const RawEntry& e : entries) {
    if (e.elements.empty()) throw parse_error("coloring entry with no elements");
    for (uint64_t x : e.elements) max_elem = std::max(max_elem, x);
    max_color = std::max(max_color, e.color);
    if (e.elements.size() != arity) uniform = false;
  }
  if (!uniform) subsets = true;
  uint32_t table_arity = subsets ? 0 : uint32_t(arity);
  uint64_t ground = max_elem + 1;
  uint32_t colors = std::max<uint32_t>(2, uint32_t(max_color) + 1);
  ColoringTable table(table_arity, ground, colors);
  for (const RawEntry& e : entries) {
    uint64_t mask = 0;
    for (uint64_t x : e.elements) {
      uint64_t bit = uint64_t{1} << x;
      if (mask & bit) throw parse_error("repeated element in coloring entry");
      mask |= bit;
    }
    if (table.is_colored(mask)) throw parse_error("node colored twice");
    table.set(mask, e.color);
  }
  if (!table.total()) throw parse_error("coloring does not cover its domain");
  return table;
}

}  // namespace

ColoringTable coloring_from_csv(std::istream& in) {
  std::vector<RawEntry> entries;
  bool subsets = false;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      if (line.find("kind=subsets") != std::string::npos) subsets = true;
      line.erase(hash);
    }
    bool blank = std::all_of(line.begin(), line.end(),
                             [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
    if (blank) continue;
    size_t comma = line.find(',');
    if (comma == std::string::npos) throw parse_error("coloring line lacks a color: " + line);
    std::istringstream elems(line.substr(0, comma));
    RawEntry entry;
    uint64_t v;
    while (elems >> v) {
      if (v >= 24) throw parse_error("element out of range");
      entry.elements.push_back(v);
    }
    if (!elems.eof()) throw parse_error("bad element list: " + line);
    std::istringstream color(line.substr(comma + 1));
    long c;
    if (!(color >> c) || c < 0 || c > 0xffff) throw parse_error("bad color: " + line);
    std::string rest;
    if (color >> rest) throw parse_error("trailing input after color: " + line);
    entry.color = uint16_t(c);
    entries.push_back(std::move(entry));
  }
  return build_table(entries, subsets);
}

ColoringTable coloring_from_csv_text(const std::string& text) {
  std::istringstream in(text);
  return coloring_from_csv(in);
}

ColoringTable coloring_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad coloring json: ") + e.what());
  }
  try {
    uint32_t arity = doc.at("arity").get<uint32_t>();
    uint64_t ground = doc.at("ground").get<uint64_t>();
    uint32_t colors = doc.at("colors").get<uint32_t>();
    ColoringTable table(arity, ground, colors);
    for (const auto& entry : doc.at("entries")) {
      uint64_t mask = 0;
      for (uint64_t x : entry.at(0).get<std::vector<uint64_t>>()) {
        if (x >= ground) throw parse_error("element out of range");
        mask |= uint64_t{1} << x;
      }
      table.set(mask, entry.at(1).get<uint16_t>());
    }
    if (!table.total()) throw parse_error("coloring does not cover its domain");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad coloring json: ") + e.what());
  }
}

ColoringTable coloring_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open coloring file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return coloring_from_json_text(buffer.str());
  return coloring_from_csv_text(buffer.str());
}

std::string coloring_to_json_text(const ColoringTable& table) {
  nlohmann::ordered_json doc;
  doc["arity"] = table.arity();
  doc["ground"] = table.ground_count();
  doc["colors"] = table.colors();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (uint64_t mask : table.domain()) {
    std::vector<uint64_t> elems;
    for (uint64_t e = 0; e < table.ground_count(); ++e)
      if (mask & (uint64_t{1} << e)) elems.push_back(e);
    entries.push_back({elems, table.color(mask)});
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

}  // namespace rf
