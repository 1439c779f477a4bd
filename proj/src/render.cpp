#include "monosimplex/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "monosimplex/errors.hpp"

namespace monosimplex {

namespace {

constexpr std::int64_t kMargin = 5;

struct Cell {
  std::uint64_t column;
  std::uint64_t layer;  // 0 = base
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::set<Cell> highlighted_cells(const RenderPlan& plan) {
  std::set<Cell> out;
  for (const auto& p : plan.highlight) {
    auto where = locate(plan.rain, p);
    if (!where) throw InvalidArgument("highlighted point " + p.str() + " is not a point of " + plan.rain.str());
    out.insert(Cell{where->kappa[0], where->layer});
  }
  return out;
}

std::string render_svg(const RenderPlan& plan, const std::set<Cell>& circled) {
  const std::uint64_t l = plan.rain.length();
  const auto heights = layer_heights(l, plan.units_per_height);
  const std::int64_t top = heights.empty() ? 0 : heights.front();
  const std::int64_t width = static_cast<std::int64_t>(l - 1) * plan.units_per_step + 2 * kMargin;
  const std::int64_t height = top + 2 * kMargin;
  auto cx = [&](std::uint64_t column) { return kMargin + static_cast<std::int64_t>(column) * plan.units_per_step; };
  auto cy = [&](std::uint64_t layer) { return kMargin + top - (layer == 0 ? 0 : heights[layer - 1]); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<title>" << plan.rain.str() << "</title>\n";
  out << "<g fill=\"black\">\n";
  for (std::uint64_t j = 0; j < l; ++j) {
    out << "<circle cx=\"" << cx(j) << "\" cy=\"" << cy(0) << "\" r=\"0.5\"/>\n";
  }
  for (std::uint64_t k = 1; k < l; ++k) {
    for (std::uint64_t j = 0; j + k < l; ++j) {
      out << "<circle cx=\"" << cx(j) << "\" cy=\"" << cy(k) << "\" r=\"0.35\"/>\n";
    }
  }
  out << "</g>\n";
  if (!circled.empty()) {
    out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"0.2\">\n";
    for (const auto& c : circled) {
      out << "<circle cx=\"" << cx(c.column) << "\" cy=\"" << cy(c.layer) << "\" r=\"1\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const RenderPlan& plan, const std::set<Cell>& circled) {
  const std::uint64_t l = plan.rain.length();
  std::vector<std::string> labels;
  for (std::uint64_t k = 1; k < l; ++k) labels.push_back("y=" + point_at(plan.rain, 0, k)[1].str());
  labels.push_back("y=" + plan.rain.origin()[1].str());
  std::size_t pad = 0;
  for (const auto& s : labels) pad = std::max(pad, s.size());

  std::ostringstream out;
  out << plan.rain.str() << "\n";
  auto row = [&](const std::string& label, std::uint64_t layer, std::uint64_t count) {
    std::string line = label + std::string(pad - label.size(), ' ') + " |";
    for (std::uint64_t j = 0; j < count; ++j) line += circled.count(Cell{j, layer}) ? " O" : " *";
    out << line << "\n";
  };
  for (std::uint64_t k = 1; k < l; ++k) row(labels[k - 1], k, l - k);
  row(labels.back(), 0, l);
  return out.str();
}

}  // namespace

std::vector<std::int64_t> layer_heights(std::uint64_t length, std::int64_t units_per_height) {
  if (units_per_height < 1) throw InvalidArgument("units per height must be positive");
  for (std::int64_t h = units_per_height;; h *= 2) {
    std::vector<std::int64_t> out;
    std::int64_t prev = h + 1;
    for (std::uint64_t k = 1; k < length; ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      const std::int64_t rounded = (2 * h + kk) / (2 * kk);
      prev = std::min(rounded, prev - 1);
      out.push_back(prev);
    }
    if (out.empty() || out.back() >= 1) return out;
    if (h > (std::int64_t{1} << 40)) throw LimitExceeded("rain too long to draw");
  }
}

std::string render(const RenderPlan& plan) {
  if (plan.units_per_step < 1) throw InvalidArgument("units per step must be positive");
  if (point_count(plan.rain) > kRenderPointLimit) {
    throw LimitExceeded("rain has too many points to draw (limit " + std::to_string(kRenderPointLimit) + ")");
  }
  const auto circled = highlighted_cells(plan);
  return plan.format == RenderFormat::Svg ? render_svg(plan, circled) : render_ascii(plan, circled);
}

}  // namespace monosimplex
