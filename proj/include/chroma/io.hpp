#ifndef CHROMA_IO_HPP
#define CHROMA_IO_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chroma/core.hpp"

namespace chroma {

/// Text formats:
///   .ecg   `ecg <n> <m> [bipartite <k>]` then m lines `u v c`
///   .org   `org <n> <m>` then m lines `u v` (arc u->v)
///   .corg  `corg <n> <m>` then m lines `u v c`
/// Vertices are 0-indexed; with `bipartite k` the first k vertices form
/// the first side.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

EdgeColoredGraph parse_ecg(std::string_view text);
OrientedGraph parse_org(std::string_view text);
ColoredOrientation parse_corg(std::string_view text);

/// Throws std::invalid_argument when the bipartition is not a prefix
/// split; see to_prefix_layout.
std::string render_ecg(const EdgeColoredGraph& g);
std::string render_org(const OrientedGraph& d);
std::string render_corg(const ColoredOrientation& d);

/// Relabels vertices so that the first side comes first (stable within
/// each side). `old_to_new`, when given, receives the permutation.
EdgeColoredGraph to_prefix_layout(const EdgeColoredGraph& g,
                                  std::vector<Vertex>* old_to_new = nullptr);

using AnyGraph = std::variant<EdgeColoredGraph, OrientedGraph, ColoredOrientation>;

/// Dispatches on the header keyword.
AnyGraph parse_any(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// FNV-1a over the canonical rendering (bipartition-free graphs and prefix
/// bipartitions render as .ecg; others hash the relabeled side list too).
std::uint64_t digest(const EdgeColoredGraph& g);
std::uint64_t digest(const OrientedGraph& d);
std::uint64_t fnv1a(std::string_view bytes,
                    std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace chroma

#endif  // CHROMA_IO_HPP
