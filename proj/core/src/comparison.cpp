#include "coeffcat/controlled/comparison.hpp"

namespace coeffcat {

GSet productWithGroup(const GSet& t) {
  const FiniteGroup& g = t.group();
  const std::uint32_t n = g.order();
  std::vector<std::string> names;
  for (Point s = 0; s < t.size(); ++s)
    for (GroupElem k = 0; k < n; ++k) names.push_back("(" + t.pointName(s) + "," + g.elementName(k) + ")");
  return GSet::fromFunction(
      g, t.size() * n, [&](GroupElem a, Point p) { return t.act(a, p / n) * n + g.mul(a, p % n); }, std::move(names));
}

std::vector<Point> projectToSet(const GSet& t) {
  const std::uint32_t n = t.group().order();
  std::vector<Point> p(std::size_t{t.size()} * n);
  for (Point i = 0; i < p.size(); ++i) p[i] = i / n;
  return p;
}

}  // namespace coeffcat
