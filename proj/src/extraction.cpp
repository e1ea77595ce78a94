#include "chroma/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chroma/transforms.hpp"

namespace chroma {

namespace {

void check_st(int s, int t) {
  if (s < 2 || t < s)
    throw std::invalid_argument("need 2 <= s <= t, got s=" + std::to_string(s) +
                                " t=" + std::to_string(t));
}

// ((t-1)/(s-1)!)^(1/s)
double base_factor(int s, int t) {
  double fact = std::tgamma(static_cast<double>(s));
  return std::pow(static_cast<double>(t - 1) / fact, 1.0 / s);
}

bool contains(const std::vector<Color>& colors, Color c) {
  return std::find(colors.begin(), colors.end(), c) != colors.end();
}

struct Compact {
  EdgeColoredGraph graph;
  std::vector<Vertex> to_global;
};

// Bipartite subgraph of g between `first` and `second` (disjoint), relabeled
// so that `first` occupies the prefix.
Compact induce_bipartite(const EdgeColoredGraph& g, const std::vector<Vertex>& first,
                         const std::vector<Vertex>& second) {
  std::vector<std::int64_t> local(g.order(), -1);
  std::vector<Vertex> to_global;
  for (Vertex v : first) {
    local[v] = static_cast<std::int64_t>(to_global.size());
    to_global.push_back(v);
  }
  std::vector<char> in_second(g.order(), 0);
  for (Vertex v : second) {
    local[v] = static_cast<std::int64_t>(to_global.size());
    to_global.push_back(v);
    in_second[v] = 1;
  }
  std::vector<Edge> edges;
  for (Vertex u : first)
    for (const auto& nb : g.neighbors(u))
      if (in_second[nb.v])
        edges.push_back({static_cast<Vertex>(local[u]), static_cast<Vertex>(local[nb.v]),
                         nb.c});
  return {EdgeColoredGraph::with_prefix_bipartition(to_global.size(), std::move(edges),
                                                    first.size()),
          std::move(to_global)};
}

// Removes from the dual-space subgraph h0 every edge at v^(1) whose color
// appears at v^(2), reading color sets from h0 itself; then reads off H and
// its orientation.
OrientationResult orient_from_dual(const EdgeColoredGraph& g,
                                   const std::vector<Edge>& h0_edges) {
  const std::size_t n = g.order();
  DualVertexMap map{n};
  std::vector<std::vector<Color>> in_colors(n);
  for (const auto& e : h0_edges) {
    // Dual edges are stored with u < v, so u is the first-side endpoint.
    in_colors[map.original(e.v)].push_back(e.c);
  }
  for (auto& cs : in_colors) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  }
  std::vector<ColoredArc> arcs;
  std::vector<Edge> h_edges;
  for (const auto& e : h0_edges) {
    Vertex tail = map.original(e.u);
    Vertex head = map.original(e.v);
    if (std::binary_search(in_colors[tail].begin(), in_colors[tail].end(), e.c))
      continue;
    arcs.push_back({tail, head, e.c});
    h_edges.push_back({tail, head, e.c});
  }
  OrientationResult result{EdgeColoredGraph(n, std::move(h_edges), g.sides()),
                           ColoredOrientation(g, std::move(arcs)),
                           {}};
  return result;
}

void fill_bounds(const EdgeColoredGraph& g, OrientationResult& r,
                 const std::vector<double>& loss) {
  r.report.vertices.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& vb = r.report.vertices[v];
    vb.dplus = r.d.out_degree(v);
    vb.dc = color_degree(g, v);
    vb.bound = static_cast<double>(vb.dc) - loss[v] - r.report.s;
    vb.margin = static_cast<double>(vb.dplus) - vb.bound;
  }
}

LemmaRun summarize(const ExtractionResult& ex) {
  return {ex.n2, ex.state.order.size(), ex.x, ex.threshold};
}

}  // namespace

double sigma(int s, int t) {
  check_st(s, t);
  return s * base_factor(s, t);
}

double default_threshold(int s, int t, std::size_t n2) {
  check_st(s, t);
  return (s - 1) * base_factor(s, t) *
         std::pow(static_cast<double>(n2), 1.0 - 1.0 / s);
}

ExtractionResult lemma1_extract(const EdgeColoredGraph& g,
                                const ExtractionParams& params) {
  check_st(params.s, params.t);
  if (!g.has_bipartition())
    throw std::invalid_argument("extraction requires a bipartite graph");
  if (params.x && !(std::isfinite(*params.x) && *params.x > 0))
    throw std::invalid_argument("threshold x must be finite and positive");

  const auto first = g.side_vertices(Side::first);
  const std::size_t n2 = g.order() - first.size();
  const auto need = static_cast<std::size_t>(params.s - 1);

  ExtractionResult r;
  r.n2 = n2;
  r.x = params.x ? *params.x : default_threshold(params.s, params.t, n2);
  r.threshold = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(r.x)));
  r.sigma = sigma(params.s, params.t);
  r.delta_bound = r.sigma * std::pow(static_cast<double>(n2), 1.0 - 1.0 / params.s);
  r.size_bound = r.x > 0 ? static_cast<double>(need * n2) / r.x : 0.0;
  r.proper = side_proper_subgraph(g, Side::first);

  auto& st = r.state;
  st.sat_index.assign(g.order(), 0);
  st.saturated.assign(g.order(), false);
  st.kept_colors.assign(g.order(), {});
  auto& colors = st.kept_colors;

  // The count of eligible neighbors of a candidate only shrinks as U grows,
  // so a candidate rejected once stays rejected: one ascending pass reaches
  // the same maximal U as rescanning from the smallest id after each pick.
  for (Vertex u : first) {
    std::size_t eligible = 0;
    for (const auto& nb : r.proper.neighbors(u))
      if (!st.saturated[nb.v] && !contains(colors[nb.v], nb.c)) ++eligible;
    if (eligible < r.threshold) continue;
    st.order.push_back(u);
    const std::size_t index = st.order.size();
    for (const auto& nb : r.proper.neighbors(u)) {
      if (st.saturated[nb.v] || contains(colors[nb.v], nb.c)) continue;
      colors[nb.v].push_back(nb.c);
      if (colors[nb.v].size() >= need) {
        st.saturated[nb.v] = true;
        st.sat_index[nb.v] = index;
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::sort(colors[v].begin(), colors[v].end());
    if (g.side(v) == Side::second && !st.saturated[v]) st.sat_index[v] = st.order.size();
  }

  std::vector<Edge> kept;
  for (const auto& e : r.proper.edges()) {
    Vertex v = g.side(e.u) == Side::second ? e.u : e.v;
    if (std::binary_search(colors[v].begin(), colors[v].end(), e.c)) kept.push_back(e);
  }
  r.h = EdgeColoredGraph(g.order(), std::move(kept), g.sides());

  r.deltas.assign(g.order(), 0);
  for (Vertex u : first) r.deltas[u] = color_degree(g, u) - color_degree(r.h, u);
  return r;
}

OrientationResult construct_orientation(const EdgeColoredGraph& g,
                                        const OrientationOptions& options) {
  check_st(options.s, options.t);
  if (static_cast<std::size_t>(options.t) >= g.order())
    throw std::invalid_argument("need t < n");
  auto dual = dual_graph(g);
  auto ex = lemma1_extract(dual, {options.s, options.t, options.x});
  auto result = orient_from_dual(g, {ex.h.edges().begin(), ex.h.edges().end()});
  result.report.s = options.s;
  result.report.t = options.t;
  result.report.sigma = ex.sigma;
  result.report.runs.push_back(summarize(ex));
  fill_bounds(g, result, std::vector<double>(g.order(), ex.delta_bound));
  return result;
}

OrientationResult construct_orientation_bipartite(const EdgeColoredGraph& g,
                                                  const OrientationOptions& options) {
  check_st(options.s, options.t);
  if (!g.has_bipartition())
    throw std::invalid_argument("bipartite orientation requires a bipartition");
  const std::size_t n = g.order();
  DualVertexMap map{n};
  auto dual = dual_graph(g);
  const auto v1 = g.side_vertices(Side::first);
  const auto v2 = g.side_vertices(Side::second);

  auto lift = [&](const std::vector<Vertex>& vs, bool second) {
    std::vector<Vertex> out;
    for (Vertex v : vs) out.push_back(second ? map.second(v) : map.first(v));
    return out;
  };

  std::vector<Edge> h0;
  OrientationReport report;
  report.s = options.s;
  report.t = options.t;
  report.sigma = sigma(options.s, options.t);
  report.bipartite = true;
  // Half 1: V1^(1) against V2^(2); half 2: V2^(1) against V1^(2).
  for (auto [a, b] : {std::pair{&v1, &v2}, std::pair{&v2, &v1}}) {
    auto part = induce_bipartite(dual, lift(*a, false), lift(*b, true));
    auto ex = lemma1_extract(part.graph, {options.s, options.t, options.x});
    report.runs.push_back(summarize(ex));
    for (const auto& e : ex.h.edges()) {
      Vertex x = part.to_global[e.u], y = part.to_global[e.v];
      h0.push_back({std::min(x, y), std::max(x, y), e.c});
    }
  }
  std::sort(h0.begin(), h0.end());

  auto result = orient_from_dual(g, h0);
  result.report = std::move(report);
  std::vector<double> loss(n);
  const double exponent = 1.0 - 1.0 / options.s;
  for (Vertex v = 0; v < n; ++v) {
    double other = static_cast<double>(g.side(v) == Side::first ? v2.size() : v1.size());
    loss[v] = result.report.sigma * std::pow(other, exponent);
  }
  fill_bounds(g, result, loss);
  return result;
}

}  // namespace chroma
