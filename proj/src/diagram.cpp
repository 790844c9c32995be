#include "lieorb/diagram.hpp"

#include <sstream>
#include <stdexcept>

namespace lieorb {

WeightedDiagram::WeightedDiagram(CartanType t, std::vector<int> l) : type(t), labels(std::move(l)) {
  if (static_cast<int>(labels.size()) != t.rank)
    throw std::invalid_argument("diagram for " + t.name() + " needs " + std::to_string(t.rank) + " labels");
  for (int x : labels)
    if (x < 0 || x > 2) throw std::invalid_argument("diagram labels must lie in {0,1,2}");
}

WeightedDiagram WeightedDiagram::parse(CartanType t, std::string_view text) {
  return {t, parse_int_list(text)};
}

std::string WeightedDiagram::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  return os.str();
}

int WeightedDiagram::value(const Root& r) const {
  int v = 0;
  for (int i = 0; i < type.rank; ++i) v += r(i) * labels[i];
  return v;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace lieorb
