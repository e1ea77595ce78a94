#include <algorithm>
#include <stdexcept>

#include "budget.hpp"
#include "chroma/detectors.hpp"
#include "chroma/extraction.hpp"

namespace chroma {

namespace {

// A properly colored K_{2,2} on ({a, b}, {x, y}) read as the cycle a-x-b-y.
Witness c4_from_k22(const EdgeColoredGraph& g, const Witness& k22) {
  const auto& s = k22.vertices[0];
  const auto& t = k22.vertices[1];
  return cycle_witness(g, {s[0], t[0], s[1], t[1]});
}

Witness remap_directed(const EdgeColoredGraph& g, const Witness& directed) {
  auto w = cycle_witness(g, directed.vertices.front());
  if (!verify(g, w))
    throw std::logic_error("orientation cycle is not properly colored in the host");
  return w;
}

bool worse(SearchStatus status) { return status == SearchStatus::budget_exceeded; }

}  // namespace

PipelineOutcome pc_short_cycle_pipeline(const EdgeColoredGraph& g, std::size_t r,
                                        const SearchBudget& budget) {
  if (r < 4) throw std::invalid_argument("pipeline needs r >= 4");
  detail::BudgetMeter meter(budget);
  PipelineOutcome result;
  result.conjectured_bound = (g.order() + r - 1) / r;
  auto& out = result.outcome;
  bool exceeded = false;

  auto stage1 = find_pc_kst(g, 2, 2, meter.remaining());
  meter.absorb(stage1.stats);
  if (stage1.status == SearchStatus::found) {
    result.stage = 1;
    out.status = SearchStatus::found;
    out.witness = c4_from_k22(g, *stage1.witness);
    out.stats = meter.stats();
    return result;
  }
  exceeded |= worse(stage1.status);

  if (g.order() >= 3) {
    auto orient = construct_orientation(g, {2, 2, std::nullopt});
    std::size_t min_out = orient.d.order() ? orient.d.out_degree(0) : 0;
    for (Vertex v = 0; v < orient.d.order(); ++v)
      min_out = std::min(min_out, orient.d.out_degree(v));
    result.min_out_degree = min_out;
    result.margin = static_cast<long long>(min_out) -
                    static_cast<long long>(result.conjectured_bound);
    auto cycle = shortest_directed_cycle(orient.d.digraph());
    meter.absorb(cycle.stats);
    if (cycle.status == SearchStatus::found) {
      const auto length = cycle.witness->vertices.front().size();
      result.directed_girth = length;
      if (length <= r) {
        result.stage = 2;
        out.status = SearchStatus::found;
        out.witness = remap_directed(g, *cycle.witness);
        out.stats = meter.stats();
        return result;
      }
    }
  }

  auto stage3 = find_pc_cycle_upto(g, r, meter.remaining());
  meter.absorb(stage3.stats);
  out.stats = meter.stats();
  if (stage3.status == SearchStatus::found) {
    result.stage = 3;
    out.status = SearchStatus::found;
    out.witness = std::move(stage3.witness);
    return result;
  }
  exceeded |= worse(stage3.status);
  out.status = exceeded ? SearchStatus::budget_exceeded : SearchStatus::exhausted_none;
  return result;
}

SearchOutcome disjoint_pc_cycles(const EdgeColoredGraph& g, std::size_t k,
                                 const SearchBudget& budget) {
  if (k == 0) throw std::invalid_argument("need k >= 1");
  detail::BudgetMeter meter(budget);
  std::vector<Edge> residual(g.edges().begin(), g.edges().end());
  std::vector<Witness> family;
  bool exceeded = false;

  while (family.size() < k) {
    EdgeColoredGraph rest(g.order(), residual);
    std::optional<Witness> cycle;

    auto c4 = find_pc_kst(rest, 2, 2, meter.remaining());
    meter.absorb(c4.stats);
    if (c4.status == SearchStatus::found) {
      cycle = c4_from_k22(rest, *c4.witness);
    } else {
      exceeded |= worse(c4.status);
      // The orientation's shortest directed cycle caps the exact search.
      std::size_t cap = std::max<std::size_t>(3, g.order());
      std::optional<Witness> fallback;
      if (rest.order() >= 3 && rest.size() > 0) {
        auto orient = construct_orientation(rest, {2, 2, std::nullopt});
        auto dc = shortest_directed_cycle(orient.d.digraph());
        meter.absorb(dc.stats);
        if (dc.status == SearchStatus::found) {
          fallback = remap_directed(rest, *dc.witness);
          cap = fallback->vertices.front().size();
        }
      }
      auto exact = find_pc_cycle_upto(rest, cap, meter.remaining());
      meter.absorb(exact.stats);
      if (exact.status == SearchStatus::found) {
        cycle = std::move(exact.witness);
      } else {
        exceeded |= worse(exact.status);
        cycle = std::move(fallback);
      }
    }
    if (!cycle) break;

    const auto& vs = cycle->vertices.front();
    std::erase_if(residual, [&](const Edge& e) {
      return std::find(vs.begin(), vs.end(), e.u) != vs.end() ||
             std::find(vs.begin(), vs.end(), e.v) != vs.end();
    });
    family.push_back(std::move(*cycle));
    if (meter.exceeded()) {
      exceeded = true;
      break;
    }
  }

  SearchOutcome out;
  out.stats = meter.stats();
  if (family.size() >= k) {
    Witness w;
    w.kind = WitnessKind::disjoint_cycles;
    for (const auto& c : family) {
      w.vertices.push_back(c.vertices.front());
      w.edges.insert(w.edges.end(), c.edges.begin(), c.edges.end());
    }
    if (!verify(g, w)) throw std::logic_error("disjoint cycle family failed verification");
    out.status = SearchStatus::found;
    out.witness = std::move(w);
  } else {
    out.status = exceeded ? SearchStatus::budget_exceeded : SearchStatus::exhausted_none;
    out.partial = std::move(family);
  }
  return out;
}

}  // namespace chroma
