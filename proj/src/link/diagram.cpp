#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lgkit/errors.hpp"
#include "lgkit/link.hpp"

namespace lgkit {

OrientedDiagram::OrientedDiagram(std::vector<Crossing> crossings, std::vector<Component> components)
    : crossings_(std::move(crossings)), components_(std::move(components)) {
  std::map<int, std::pair<int, int>> seen;  // id -> (over visits, under visits)
  for (const auto& c : crossings_) {
    if (c.sign != 1 && c.sign != -1) throw MalformedDiagram("crossing sign must be +1 or -1");
    if (!seen.try_emplace(c.id, 0, 0).second) {
      throw MalformedDiagram("duplicate crossing id " + std::to_string(c.id));
    }
  }
  for (const auto& comp : components_) {
    for (const auto& v : comp.visits) {
      auto it = seen.find(v.crossing);
      if (it == seen.end()) throw MalformedDiagram("visit to unknown crossing " + std::to_string(v.crossing));
      ++(v.over ? it->second.first : it->second.second);
    }
  }
  for (const auto& [id, count] : seen) {
    if (count.first != 1 || count.second != 1) {
      throw MalformedDiagram("crossing " + std::to_string(id) + " must be met once over and once under");
    }
  }
}

int OrientedDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

bool OrientedDiagram::has_crossing(int id) const {
  return std::any_of(crossings_.begin(), crossings_.end(), [id](const Crossing& c) { return c.id == id; });
}

int OrientedDiagram::sign_of(int id) const {
  for (const auto& c : crossings_) {
    if (c.id == id) return c.sign;
  }
  throw std::out_of_range("unknown crossing id " + std::to_string(id));
}

OrientedDiagram braid_closure(const BraidWord& b) {
  const int n = b.strands;
  for (const auto& l : b.letters) {
    if (l.index < 1 || l.index >= n) throw MalformedDiagram("braid letter out of range");
  }
  std::vector<Crossing> crossings;
  for (std::size_t k = 0; k < b.letters.size(); ++k) {
    crossings.push_back(Crossing{static_cast<int>(k), b.letters[k].sign});
  }
  std::vector<Component> components;
  std::vector<bool> started(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (started[static_cast<std::size_t>(start)]) continue;
    Component comp;
    int p = start;
    do {
      started[static_cast<std::size_t>(p)] = true;
      for (std::size_t k = 0; k < b.letters.size(); ++k) {
        const auto& l = b.letters[k];
        const int left = l.index - 1;
        if (p != left && p != left + 1) continue;
        // sigma_i^{+1}: the strand entering on the left passes over.
        const bool from_left = p == left;
        comp.visits.push_back(Visit{static_cast<int>(k), from_left == (l.sign > 0)});
        p = from_left ? left + 1 : left;
      }
    } while (p != start);
    components.push_back(std::move(comp));
  }
  return OrientedDiagram(std::move(crossings), std::move(components));
}

namespace {

struct Location {
  std::size_t component;
  std::size_t position;
};

std::vector<Location> locate(const OrientedDiagram& d, int id) {
  std::vector<Location> out;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    const auto& visits = d.components()[c].visits;
    for (std::size_t p = 0; p < visits.size(); ++p) {
      if (visits[p].crossing == id) out.push_back(Location{c, p});
    }
  }
  if (out.size() != 2) throw std::out_of_range("unknown crossing id " + std::to_string(id));
  return out;
}

}  // namespace

OrientedDiagram switch_crossing(const OrientedDiagram& d, int id) {
  if (!d.has_crossing(id)) throw std::out_of_range("unknown crossing id " + std::to_string(id));
  std::vector<Crossing> crossings = d.crossings();
  for (auto& c : crossings) {
    if (c.id == id) c.sign = -c.sign;
  }
  std::vector<Component> components = d.components();
  for (auto& comp : components) {
    for (auto& v : comp.visits) {
      if (v.crossing == id) v.over = !v.over;
    }
  }
  return OrientedDiagram(std::move(crossings), std::move(components));
}

OrientedDiagram smooth_crossing(const OrientedDiagram& d, int id) {
  const auto loc = locate(d, id);
  std::vector<Crossing> crossings;
  for (const auto& c : d.crossings()) {
    if (c.id != id) crossings.push_back(c);
  }
  std::vector<Component> components = d.components();
  const auto& [ca, pa] = loc[0];
  const auto& [cb, pb] = loc[1];
  if (ca == cb) {
    const auto& v = components[ca].visits;
    Component outer;
    Component inner;
    outer.visits.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pa));
    outer.visits.insert(outer.visits.end(), v.begin() + static_cast<std::ptrdiff_t>(pb) + 1, v.end());
    inner.visits.assign(v.begin() + static_cast<std::ptrdiff_t>(pa) + 1, v.begin() + static_cast<std::ptrdiff_t>(pb));
    components[ca] = std::move(outer);
    components.insert(components.begin() + static_cast<std::ptrdiff_t>(ca) + 1, std::move(inner));
  } else {
    const auto& x = components[ca].visits;
    const auto& y = components[cb].visits;
    Component merged;
    auto& m = merged.visits;
    m.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(pa));
    m.insert(m.end(), y.begin() + static_cast<std::ptrdiff_t>(pb) + 1, y.end());
    m.insert(m.end(), y.begin(), y.begin() + static_cast<std::ptrdiff_t>(pb));
    m.insert(m.end(), x.begin() + static_cast<std::ptrdiff_t>(pa) + 1, x.end());
    components[ca] = std::move(merged);
    components.erase(components.begin() + static_cast<std::ptrdiff_t>(cb));
  }
  return OrientedDiagram(std::move(crossings), std::move(components));
}

OrientedDiagram relabel(const OrientedDiagram& d, const std::map<int, int>& ids) {
  auto rename = [&](int id) {
    auto it = ids.find(id);
    return it == ids.end() ? id : it->second;
  };
  std::vector<Crossing> crossings = d.crossings();
  for (auto& c : crossings) c.id = rename(c.id);
  std::vector<Component> components = d.components();
  for (auto& comp : components) {
    for (auto& v : comp.visits) v.crossing = rename(v.crossing);
  }
  return OrientedDiagram(std::move(crossings), std::move(components));
}

bool is_split(const OrientedDiagram& d) {
  const std::size_t n = d.component_count();
  if (n <= 1) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, std::size_t> first_component;
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& v : d.components()[c].visits) {
      auto [it, inserted] = first_component.try_emplace(v.crossing, c);
      if (!inserted) parent[find(it->second)] = find(c);
    }
  }
  const std::size_t root = find(0);
  for (std::size_t c = 1; c < n; ++c) {
    if (find(c) != root) return true;
  }
  return false;
}

std::string canonical_key(const OrientedDiagram& d) {
  std::map<int, int> renamed;
  std::string key;
  for (const auto& comp : d.components()) {
    key += '[';
    for (const auto& v : comp.visits) {
      auto [it, inserted] = renamed.try_emplace(v.crossing, static_cast<int>(renamed.size()));
      key += std::to_string(it->second);
      key += v.over ? 'o' : 'u';
      if (inserted) key += d.sign_of(v.crossing) > 0 ? '+' : '-';
    }
    key += ']';
  }
  return key;
}

std::optional<int> first_descending_violation(const OrientedDiagram& d) {
  std::set<int> seen;
  for (const auto& comp : d.components()) {
    for (const auto& v : comp.visits) {
      if (seen.insert(v.crossing).second && !v.over) return v.crossing;
    }
  }
  return std::nullopt;
}

}  // namespace lgkit
