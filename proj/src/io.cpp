#include "chroma/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace chroma {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::uint64_t number(const Line& line, std::string_view token,
                     std::uint64_t max = std::numeric_limits<std::uint32_t>::max()) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line.number, "expected a nonnegative integer, got '" +
                                      std::string(token) + "'");
  if (value > max)
    throw ParseError(line.number, "value " + std::string(token) + " out of range");
  return value;
}

struct Header {
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> split;
};

Header header(const std::vector<Line>& lines, std::string_view keyword,
              bool allow_bipartite) {
  if (lines.empty()) throw ParseError(1, "missing header");
  const auto& h = lines.front();
  if (h.tokens[0] != keyword)
    throw ParseError(h.number, "expected header keyword '" + std::string(keyword) + "'");
  Header out;
  if (allow_bipartite && h.tokens.size() == 5 && h.tokens[3] == "bipartite") {
    out.split = number(h, h.tokens[4]);
  } else if (h.tokens.size() != 3) {
    throw ParseError(h.number, "malformed header");
  }
  out.n = number(h, h.tokens[1]);
  out.m = number(h, h.tokens[2]);
  if (out.split && *out.split > out.n)
    throw ParseError(h.number, "bipartite prefix exceeds n");
  if (lines.size() - 1 != out.m)
    throw ParseError(lines.back().number,
                     "header declares " + std::to_string(out.m) + " records, found " +
                         std::to_string(lines.size() - 1));
  return out;
}

// Per-record validation gives line-numbered errors; the constructors
// re-check globally.
template <typename Graph>
Graph build(const std::vector<Line>& lines, auto&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, e.what());
  }
}

std::uint64_t fnv_step(std::uint64_t h, unsigned char byte) {
  return (h ^ byte) * 0x100000001b3ULL;
}

}  // namespace

EdgeColoredGraph parse_ecg(std::string_view text) {
  auto lines = tokenize(text);
  auto h = header(lines, "ecg", true);
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen(h.n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 3) throw ParseError(l.number, "expected 'u v c'");
    auto u = static_cast<Vertex>(number(l, l.tokens[0]));
    auto v = static_cast<Vertex>(number(l, l.tokens[1]));
    auto c = static_cast<Color>(number(l, l.tokens[2]));
    if (u >= h.n || v >= h.n) throw ParseError(l.number, "vertex id >= n");
    if (u == v) throw ParseError(l.number, "loop at vertex " + std::to_string(u));
    Vertex a = std::min(u, v), b = std::max(u, v);
    for (Vertex x : seen[a])
      if (x == b) throw ParseError(l.number, "duplicate edge");
    seen[a].push_back(b);
    if (h.split && ((a < *h.split) == (b < *h.split)))
      throw ParseError(l.number, "edge does not cross the bipartition");
    edges.push_back({u, v, c});
  }
  return build<EdgeColoredGraph>(lines, [&] {
    return h.split ? EdgeColoredGraph::with_prefix_bipartition(h.n, std::move(edges), *h.split)
                   : EdgeColoredGraph(h.n, std::move(edges));
  });
}

OrientedGraph parse_org(std::string_view text) {
  auto lines = tokenize(text);
  auto h = header(lines, "org", false);
  std::vector<Arc> arcs;
  std::vector<std::vector<Vertex>> seen(h.n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'u v'");
    auto u = static_cast<Vertex>(number(l, l.tokens[0]));
    auto v = static_cast<Vertex>(number(l, l.tokens[1]));
    if (u >= h.n || v >= h.n) throw ParseError(l.number, "vertex id >= n");
    if (u == v) throw ParseError(l.number, "loop at vertex " + std::to_string(u));
    Vertex a = std::min(u, v), b = std::max(u, v);
    for (Vertex x : seen[a])
      if (x == b) throw ParseError(l.number, "duplicate or anti-parallel arc");
    seen[a].push_back(b);
    arcs.push_back({u, v});
  }
  return build<OrientedGraph>(lines, [&] { return OrientedGraph(h.n, std::move(arcs)); });
}

ColoredOrientation parse_corg(std::string_view text) {
  auto lines = tokenize(text);
  auto h = header(lines, "corg", false);
  std::vector<ColoredArc> arcs;
  std::vector<std::vector<Vertex>> seen(h.n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 3) throw ParseError(l.number, "expected 'u v c'");
    auto u = static_cast<Vertex>(number(l, l.tokens[0]));
    auto v = static_cast<Vertex>(number(l, l.tokens[1]));
    auto c = static_cast<Color>(number(l, l.tokens[2]));
    if (u >= h.n || v >= h.n) throw ParseError(l.number, "vertex id >= n");
    if (u == v) throw ParseError(l.number, "loop at vertex " + std::to_string(u));
    Vertex a = std::min(u, v), b = std::max(u, v);
    for (Vertex x : seen[a])
      if (x == b) throw ParseError(l.number, "duplicate or anti-parallel arc");
    seen[a].push_back(b);
    arcs.push_back({u, v, c});
  }
  return build<ColoredOrientation>(
      lines, [&] { return ColoredOrientation(h.n, std::move(arcs)); });
}

std::string render_ecg(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << "ecg " << g.order() << ' ' << g.size();
  if (g.has_bipartition()) {
    auto split = g.prefix_split();
    if (!split)
      throw std::invalid_argument(
          "bipartition is not a prefix split; relabel with to_prefix_layout");
    out << " bipartite " << *split;
  }
  out << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.c << '\n';
  return out.str();
}

std::string render_org(const OrientedGraph& d) {
  std::ostringstream out;
  out << "org " << d.order() << ' ' << d.size() << '\n';
  for (const auto& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string render_corg(const ColoredOrientation& d) {
  std::ostringstream out;
  out << "corg " << d.order() << ' ' << d.size() << '\n';
  for (const auto& a : d.arcs()) out << a.tail << ' ' << a.head << ' ' << a.c << '\n';
  return out.str();
}

EdgeColoredGraph to_prefix_layout(const EdgeColoredGraph& g,
                                  std::vector<Vertex>* old_to_new) {
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
  std::size_t k = g.order();
  if (g.has_bipartition()) {
    Vertex next = 0;
    for (Side s : {Side::first, Side::second})
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.side(v) == s) perm[v] = next++;
    k = g.side_vertices(Side::first).size();
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.c});
  if (old_to_new) *old_to_new = perm;
  if (!g.has_bipartition()) return EdgeColoredGraph(g.order(), std::move(edges));
  return EdgeColoredGraph::with_prefix_bipartition(g.order(), std::move(edges), k);
}

AnyGraph parse_any(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header");
  auto kw = lines.front().tokens[0];
  if (kw == "ecg") return parse_ecg(text);
  if (kw == "org") return parse_org(text);
  if (kw == "corg") return parse_corg(text);
  throw ParseError(lines.front().number, "unknown format '" + std::string(kw) + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char b : bytes) h = fnv_step(h, b);
  return h;
}

std::uint64_t digest(const EdgeColoredGraph& g) {
  if (!g.has_bipartition() || g.prefix_split()) return fnv1a(render_ecg(g));
  std::string sides;
  for (Side s : *g.sides()) sides.push_back(s == Side::first ? '1' : '2');
  auto plain = EdgeColoredGraph(g.order(), {g.edges().begin(), g.edges().end()});
  return fnv1a(sides, fnv1a(render_ecg(plain)));
}

std::uint64_t digest(const OrientedGraph& d) { return fnv1a(render_org(d)); }

}  // namespace chroma
