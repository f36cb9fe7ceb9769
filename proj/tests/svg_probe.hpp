#pragma once

// Parses SVG as XML and collects elements for structural assertions.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace svg_probe {

struct Element {
  std::string name;
  std::map<std::string, std::string> attrs;
  std::string text;
  std::vector<std::string> ancestors;  // classes of enclosing elements
};

inline void walk(const boost::property_tree::ptree& node, std::vector<std::string>& classes,
                 std::vector<Element>& out) {
  for (const auto& [name, child] : node) {
    if (name == "<xmlattr>" || name == "<xmlcomment>") continue;
    Element e{name, {}, child.data(), classes};
    if (auto attrs = child.get_child_optional("<xmlattr>")) {
      for (const auto& [k, v] : *attrs) e.attrs[k] = v.data();
    }
    out.push_back(e);
    classes.push_back(e.attrs.count("class") ? e.attrs.at("class") : "");
    walk(child, classes, out);
    classes.pop_back();
  }
}

/// Throws boost::property_tree::xml_parser_error when not well-formed.
inline std::vector<Element> parse(const std::string& svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  std::vector<Element> out;
  std::vector<std::string> classes;
  walk(tree, classes, out);
  return out;
}

inline std::vector<Element> select(const std::vector<Element>& all, const std::string& name,
                                   const std::string& cls = "") {
  std::vector<Element> out;
  for (const auto& e : all) {
    if (e.name != name) continue;
    if (!cls.empty()) {
      const auto it = e.attrs.find("class");
      if (it == e.attrs.end()) continue;
      std::istringstream words(it->second);
      bool hit = false;
      for (std::string w; words >> w;) hit |= w == cls;
      if (!hit) continue;
    }
    out.push_back(e);
  }
  return out;
}

inline double num(const Element& e, const std::string& attr) { return std::stod(e.attrs.at(attr)); }

}  // namespace svg_probe
