#include "cantor/cover.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "cantor/errors.hpp"

namespace cantor {

CoverStream CoverStream::from_vector(Prime p, std::vector<Clopen> elems,
                                     std::uint64_t budget) {
  auto pos = std::make_shared<std::size_t>(0);
  auto data = std::make_shared<std::vector<Clopen>>(std::move(elems));
  return CoverStream{
      p,
      [pos, data]() -> std::optional<Clopen> {
        if (*pos >= data->size()) return std::nullopt;
        return (*data)[(*pos)++];
      },
      budget};
}

std::vector<SubcoverEntry> finite_subcover(const CoverStream& c) {
  if (c.budget < 1) throw precondition_error("budget must be >= 1");

  std::vector<Clopen> read;           // stream prefix consumed so far
  std::set<Ball> frontier;            // undischarged balls, (depth, residue) order
  std::map<std::size_t, Clopen> used; // discharging indices
  frontier.insert(Ball::root(c.p));
  bool exhausted = false;

  // Discharge b against read[from..): record the smallest covering index.
  auto discharge = [&](const Ball& b, std::size_t from) -> bool {
    for (std::size_t i = from; i < read.size(); ++i) {
      if (clopen_contains_ball(read[i], b)) {
        used.emplace(i, read[i]);
        return true;
      }
    }
    return false;
  };

  for (std::uint64_t round = 0; round < c.budget; ++round) {
    if (frontier.empty()) break;

    if (!exhausted) {
      std::optional<Clopen> elem = c.next();
      if (!elem.has_value()) {
        exhausted = true;
      } else {
        require_same_prime(c.p, elem->prime());
        read.push_back(std::move(*elem));
        std::size_t idx = read.size() - 1;
        for (auto it = frontier.begin(); it != frontier.end();) {
          if (clopen_contains_ball(read[idx], *it)) {
            used.emplace(idx, read[idx]);
            it = frontier.erase(it);
          } else {
            ++it;
          }
        }
      }
    }

    if (frontier.empty()) break;
    Ball b = *frontier.begin();
    frontier.erase(frontier.begin());
    for (const Ball& child : ball_children(b))
      if (!discharge(child, 0)) frontier.insert(child);
  }

  if (!frontier.empty())
    throw budget_exhausted("no subcover found within budget");

  std::vector<SubcoverEntry> out;
  out.reserve(used.size());
  for (auto& [idx, elem] : used) out.push_back({idx, std::move(elem)});
  return out;
}

std::vector<Clopen> disjointify(const std::vector<Clopen>& cover) {
  if (cover.empty()) throw precondition_error("disjointify needs a nonempty cover");
  Clopen seen = Clopen::bottom(cover.front().prime());
  std::vector<Clopen> out;
  for (const Clopen& u : cover) {
    Clopen v = clopen_meet(u, clopen_complement(seen));
    if (!v.is_bottom()) out.push_back(v);
    seen = clopen_join(seen, u);
  }
  return out;
}

Clopen separate(const Clopen& a, const Clopen& b) {
  if (!clopen_join(a, b).is_top()) throw precondition_error("not a cover");
  return clopen_complement(b);
}

}  // namespace cantor
